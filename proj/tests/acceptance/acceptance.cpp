// Copyright 2026 The heatbench Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance suite. Prints one PASS/FAIL/SKIP line per criterion and exits
// non-zero if any criterion fails.
//
//   acceptance [--only N] [--force-speedup]
//
// Criterion 5 (wavefront speedup) needs at least four hardware threads and
// is skipped on smaller machines unless --force-speedup is given.

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <deque>
#include <functional>
#include <future>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "heatbench/actor.hpp"
#include "heatbench/harness.hpp"
#include "heatbench/heat.hpp"
#include "heatbench/stats.hpp"
#include "schedule_log.hpp"

namespace {

using namespace heatbench;

enum class Verdict { pass, fail, skip };

struct Outcome {
  Verdict verdict;
  std::string detail;
};

// Lattice shared by criteria 1 and 2.
constexpr std::size_t kHeights[] = {3, 4, 6, 8, 16, 64};
constexpr int kSteps[] = {1, 2, 5, 16};
constexpr std::size_t kWorkers[] = {1, 2, 4, 8};
constexpr std::uint64_t kSeeds[] = {1, 2, 3};

struct LatticeTally {
  std::size_t points = 0;
  std::size_t field_mismatches = 0;
  std::size_t op_mismatches = 0;
  std::size_t resends = 0;
  std::string first_failure;
};

const LatticeTally& lattice() {
  static const LatticeTally tally = [] {
    LatticeTally t;
    for (std::size_t h : kHeights) {
      for (int steps : kSteps) {
        for (std::size_t p : kWorkers) {
          for (std::uint64_t seed : kSeeds) {
            ++t.points;
            const heat::Field initial = init_field(h, 2 * h, seed);
            const auto expected = static_cast<std::uint64_t>(h - 2) * static_cast<std::uint64_t>(steps);
            heat::Field oracle = initial;
            const auto rs = heat::seq_solve(oracle, steps);
            heat::Field wf = initial;
            const auto rw = heat::wavefront_solve(wf, steps, p);
            heat::Field dp = initial;
            const auto rd = heat::dataparallel_solve(dp, steps, p);

            const bool fields_ok = heat::fields_equal(wf, oracle) && heat::fields_equal(dp, oracle);
            const bool ops_ok = rs.ops == expected && rw.ops == expected && rd.ops == expected;
            if (!fields_ok) ++t.field_mismatches;
            if (!ops_ok) ++t.op_mismatches;
            t.resends += rw.resend_events;
            if ((!fields_ok || !ops_ok || rw.resend_events != 0) && t.first_failure.empty()) {
              std::ostringstream os;
              os << "H=" << h << " T=" << steps << " P=" << p << " seed=" << seed;
              t.first_failure = os.str();
            }
          }
        }
      }
    }
    return t;
  }();
  return tally;
}

Outcome oracle_equivalence() {
  const auto& t = lattice();
  std::ostringstream os;
  os << t.points << " lattice points, " << t.field_mismatches << " with a differing cell";
  if (!t.first_failure.empty()) os << " (first: " << t.first_failure << ")";
  return {t.field_mismatches == 0 ? Verdict::pass : Verdict::fail, os.str()};
}

Outcome op_count_conservation() {
  const auto& t = lattice();
  std::ostringstream os;
  os << t.points << " lattice points, " << t.op_mismatches << " op-count mismatches, "
     << t.resends << " resend events";
  return {t.op_mismatches == 0 && t.resends == 0 ? Verdict::pass : Verdict::fail, os.str()};
}

Outcome schedule_legality() {
  std::size_t runs = 0;
  std::size_t ops = 0;
  std::size_t violations = 0;
  for (std::size_t h : {3u, 4u, 5u, 6u, 8u, 10u, 12u}) {
    for (int steps : {1, 2, 3, 5, 8}) {
      for (std::size_t p : {1u, 2u, 3u, 4u, 8u}) {
        heat::Field f = init_field(h, h + 3, 10 * h + p);
        testing_support::ScheduleLog log;
        heat::wavefront_solve(f, steps, p, &log);
        ++runs;
        ops += log.size();
        violations += log.violations(steps, static_cast<int>(h));
        if (log.size() != (h - 2) * static_cast<std::size_t>(steps)) ++violations;
      }
    }
  }
  std::ostringstream os;
  os << runs << " wavefront runs, " << ops << " logged ops, " << violations << " violations";
  return {violations == 0 ? Verdict::pass : Verdict::fail, os.str()};
}

// Runs `work` on a helper thread; a hang past the deadline is fatal because
// the stuck workers cannot be cancelled.
template <typename F>
auto within(std::chrono::seconds deadline, const char* what, F work) {
  auto fut = std::async(std::launch::async, std::move(work));
  if (fut.wait_for(deadline) != std::future_status::ready) {
    std::printf("[FAIL] 4 runtime protocol: %s did not reach quiescence within %llds\n", what,
                static_cast<long long>(deadline.count()));
    std::fflush(stdout);
    std::_Exit(1);
  }
  return fut.get();
}

Outcome runtime_protocol() {
  using namespace heatbench::actor;
  std::vector<std::string> failures;
  auto noop = [](Message&, Actor&) {};

  // Resend guard.
  {
    Engine e(1);
    Actor b(noop), c(noop);
    Message m;
    e.send(m, b);
    e.send(m, c);
    e.send(m, b);
    if (e.ready_size() != 1 || m.owner() != &b || e.diagnostics().resend_events != 2) {
      failures.push_back("resend guard");
    }
  }

  // Per-actor serialization: 64 actors, 1e5 messages, 8 workers.
  {
    constexpr int kActors = 64;
    constexpr int kMessages = 100000;
    constexpr int kHops = 3;
    const int worst = within(std::chrono::seconds(120), "serialization stress", [&] {
      std::vector<std::atomic<int>> inside(kActors);
      std::atomic<int> peak{0};
      std::deque<Actor> actors;
      std::deque<Envelope<int>> msgs;
      Engine e(8);
      for (int k = 0; k < kActors; ++k) {
        actors.emplace_back([&, k](Message& m, Actor& self) {
          const int now = ++inside[static_cast<std::size_t>(k)];
          int seen = peak.load();
          while (now > seen && !peak.compare_exchange_weak(seen, now)) {
          }
          if (!access(m, self)) peak.store(1000);
          auto& hops = static_cast<Envelope<int>&>(m);
          if (hops.value-- > 0) {
            e.send(m, actors[static_cast<std::size_t>((k * 7 + hops.value) % kActors)]);
          }
          --inside[static_cast<std::size_t>(k)];
        });
      }
      std::vector<Delivery> boot;
      boot.reserve(kMessages);
      for (int k = 0; k < kMessages; ++k) {
        msgs.emplace_back(nullptr, kHops);
        boot.push_back({&msgs.back(), &actors[static_cast<std::size_t>(k % kActors)]});
      }
      e.run(boot);
      const auto d = e.diagnostics();
      if (d.handler_invocations != static_cast<std::uint64_t>(kMessages) * (kHops + 1)) return -1;
      for (const auto& m : msgs) {
        if (m.in_flight()) return -2;
      }
      return peak.load();
    });
    if (worst != 1) failures.push_back("serialization (peak " + std::to_string(worst) + ")");
  }

  // Quiescence: ping-pong for every worker count.
  for (std::size_t p : {1u, 2u, 4u, 8u}) {
    const int calls = within(std::chrono::seconds(60), "ping-pong", [p] {
      Engine e(p);
      std::atomic<int> n{0};
      Envelope<int> ball(nullptr, 0);
      std::deque<Actor> pair;
      for (int side = 0; side < 2; ++side) {
        pair.emplace_back([&, side](Message& m, Actor&) {
          ++n;
          auto& b = static_cast<Envelope<int>&>(m);
          if (b.value < 5000) {
            ++b.value;
            e.send(m, pair[static_cast<std::size_t>(1 - side)]);
          }
        });
      }
      e.run({{&ball, &pair[0]}});
      return (e.ready_size() == 0 && e.active() == 0) ? n.load() : -1;
    });
    if (calls != 5001) failures.push_back("quiescence P=" + std::to_string(p));
  }

  // Quiescence: wavefront workload for every worker count.
  for (std::size_t p : {1u, 2u, 4u, 8u}) {
    const bool ok = within(std::chrono::seconds(60), "wavefront", [p] {
      heat::Field f = init_field(40, 20, p);
      return heat::wavefront_solve(f, 30, p).ops == 38u * 30u;
    });
    if (!ok) failures.push_back("wavefront quiescence P=" + std::to_string(p));
  }

  // FIFO with one worker.
  {
    std::vector<int> order;
    Actor sink([&](Message& m, Actor&) { order.push_back(static_cast<Envelope<int>&>(m).value); });
    std::deque<Envelope<int>> msgs;
    std::vector<Delivery> boot;
    for (int k = 0; k < 1000; ++k) {
      msgs.emplace_back(nullptr, k);
      boot.push_back({&msgs.back(), &sink});
    }
    Engine e(1);
    e.run(boot);
    bool fifo = order.size() == 1000;
    for (std::size_t k = 0; fifo && k < order.size(); ++k) fifo = order[k] == static_cast<int>(k);
    if (!fifo) failures.push_back("FIFO order");
  }

  if (failures.empty()) {
    return {Verdict::pass,
            "resend guard, serialization (64 actors, 1e5 messages, P=8), quiescence P=1..8, FIFO"};
  }
  std::string detail = "violations:";
  for (const auto& f : failures) detail += " " + f + ";";
  return {Verdict::fail, detail};
}

Outcome speedup_direction(bool force) {
  const unsigned threads = std::thread::hardware_concurrency();
  if (threads < 4 && !force) {
    return {Verdict::skip, "needs >= 4 hardware threads, this machine reports " +
                               std::to_string(threads)};
  }
  BenchConfig cfg = BenchConfig::for_height(400);
  cfg.workers = 4;
  cfg.runs = 19;
  cfg.seed = 1;
  const RunStats seq = time_variant(cfg, Variant::seq);
  const RunStats wf = time_variant(cfg, Variant::wavefront);
  const double ratio = wf.reported.value / seq.reported.value;
  char buf[200];
  std::snprintf(buf, sizeof buf, "seq %s s, wavefront %s s, ratio %.3f (limit 0.75, %u threads)",
                format_summary(seq.reported).c_str(), format_summary(wf.reported).c_str(), ratio,
                threads);
  return {ratio <= 0.75 ? Verdict::pass : Verdict::fail, buf};
}

Outcome efficiency_arithmetic() {
  const double akka = relative_efficiency(0.8, 0.42);
  const double openmp = relative_efficiency(0.40, 0.42);
  char buf[120];
  std::snprintf(buf, sizeof buf, "E_AKKA = %g%% (want 190), E_OPENMP = %g%% (want 95)", akka,
                openmp);
  return {akka == 190.0 && openmp == 95.0 ? Verdict::pass : Verdict::fail, buf};
}

bool contained(double value, double lo, double hi) { return value >= lo && value <= hi; }

Outcome summarize_contract() {
  std::mt19937_64 rng(19);
  std::lognormal_distribution<double> base_dist(-1.0, 1.5);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::size_t violations = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const double base = base_dist(rng);
    const double spread = base * 0.3 * unit(rng);
    std::vector<double> series(19);
    for (double& x : series) x = base + spread * unit(rng);
    const Summary s = summarize(series);
    if (!contained(s.value, s.min, s.max)) ++violations;
    if (!s.exact) {
      const double half = 0.5 * std::pow(10.0, -s.digits);
      if (!contained(s.value - half, s.min, s.max) || !contained(s.value + half, s.min, s.max)) {
        ++violations;
      }
    }
  }

  // Negative control: for this series the reported two decimals are the
  // most that is guaranteed; dropping one more digit lands outside
  // [min, max], and the containment check must notice.
  const std::vector<double> adversarial{0.41, 0.42, 0.43, 0.44, 0.43, 0.42};
  const Summary s = summarize(adversarial);
  const double coarser = round_to_digits(s.mean, s.digits - 1);
  const bool control_caught = s.digits == 2 && contained(s.value, s.min, s.max) &&
                              !contained(coarser, s.min, s.max);

  std::ostringstream os;
  os << "1000 random series, " << violations << " violations; negative control "
     << (control_caught ? "caught" : "NOT caught") << " (reported " << format_summary(s)
     << ", one digit less gives " << coarser << " outside [" << s.min << ", " << s.max << "])";
  return {violations == 0 && control_caught ? Verdict::pass : Verdict::fail, os.str()};
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  bool force_speedup = false;
  for (int k = 1; k < argc; ++k) {
    if (std::strcmp(argv[k], "--only") == 0 && k + 1 < argc) {
      only = std::atoi(argv[++k]);
    } else if (std::strcmp(argv[k], "--force-speedup") == 0) {
      force_speedup = true;
    } else {
      std::fprintf(stderr, "usage: %s [--only N] [--force-speedup]\n", argv[0]);
      return 2;
    }
  }

  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> check;
  };
  const std::vector<Criterion> criteria{
      {1, "oracle equivalence", oracle_equivalence},
      {2, "op-count conservation", op_count_conservation},
      {3, "schedule legality", schedule_legality},
      {4, "runtime protocol", runtime_protocol},
      {5, "speedup direction", [force_speedup] { return speedup_direction(force_speedup); }},
      {6, "relative-efficiency arithmetic", efficiency_arithmetic},
      {7, "summarize contract", summarize_contract},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    if (only != 0 && c.id != only) continue;
    const auto start = std::chrono::steady_clock::now();
    const Outcome o = c.check();
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const char* tag = o.verdict == Verdict::pass ? "PASS" : o.verdict == Verdict::fail ? "FAIL" : "SKIP";
    std::printf("[%s] %d %s: %s (%.2fs)\n", tag, c.id, c.name, o.detail.c_str(), secs);
    std::fflush(stdout);
    if (o.verdict == Verdict::fail) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
