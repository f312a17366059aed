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

#include "heatbench/harness.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>
#include <stdexcept>

namespace heatbench {

std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::seq:
      return "seq";
    case Variant::wavefront:
      return "wavefront";
    case Variant::dataparallel:
      return "dataparallel";
  }
  return "unknown";
}

std::optional<Variant> parse_variant(std::string_view name) {
  for (Variant v : kAllVariants) {
    if (to_string(v) == name) return v;
  }
  return std::nullopt;
}

BenchConfig BenchConfig::for_height(std::size_t h) {
  BenchConfig cfg;
  cfg.h = h;
  cfg.w = 2 * h;
  cfg.t_max = static_cast<int>(2 * h);
  return cfg;
}

void BenchConfig::validate() const {
  if (h < 3) throw std::invalid_argument("h must be at least 3");
  if (w < 3) throw std::invalid_argument("w must be at least 3");
  if (t_max < 1) throw std::invalid_argument("t must be at least 1");
  if (runs < 1) throw std::invalid_argument("runs must be at least 1");
  if (workers < 1) throw std::invalid_argument("workers must be at least 1");
}

heat::Field init_field(std::size_t h, std::size_t w, std::uint64_t seed) {
  heat::Field field(h, w);
  std::mt19937_64 gen(seed);
  for (double& cell : field.cells()) {
    cell = static_cast<double>(gen() >> 11) * 0x1.0p-53;
  }
  return field;
}

SolverEntry solver_for(Variant v) {
  switch (v) {
    case Variant::seq:
      return {"seq", [](heat::Field& f, int t, std::size_t) { return heat::seq_solve(f, t); }};
    case Variant::wavefront:
      return {"wavefront", [](heat::Field& f, int t, std::size_t p) -> heat::SolveResult {
                return heat::wavefront_solve(f, t, p);
              }};
    case Variant::dataparallel:
      return {"dataparallel", [](heat::Field& f, int t, std::size_t p) {
                return heat::dataparallel_solve(f, t, p);
              }};
  }
  throw std::invalid_argument("unknown variant");
}

RunStats time_variant(const BenchConfig& cfg, const SolverEntry& solver) {
  cfg.validate();
  RunStats stats;
  stats.variant = solver.name;
  stats.h = cfg.h;
  stats.runs = cfg.runs;

  if (cfg.warmup) {
    heat::Field field = init_field(cfg.h, cfg.w, cfg.seed);
    solver.solve(field, cfg.t_max, cfg.workers);
  }
  stats.times_s.reserve(cfg.runs);
  for (std::size_t r = 0; r < cfg.runs; ++r) {
    heat::Field field = init_field(cfg.h, cfg.w, cfg.seed);
    const auto start = std::chrono::steady_clock::now();
    solver.solve(field, cfg.t_max, cfg.workers);
    const auto stop = std::chrono::steady_clock::now();
    stats.times_s.push_back(std::chrono::duration<double>(stop - start).count());
  }
  stats.reported = summarize(stats.times_s);
  stats.t_min = stats.reported.min;
  stats.t_max_s = stats.reported.max;
  return stats;
}

RunStats time_variant(const BenchConfig& cfg, Variant v) {
  if (std::find(cfg.variants.begin(), cfg.variants.end(), v) == cfg.variants.end()) {
    throw std::invalid_argument("variant " + std::string(to_string(v)) + " is not configured");
  }
  return time_variant(cfg, solver_for(v));
}

bool VerifyReport::passed() const {
  return std::all_of(variants.begin(), variants.end(), [](const auto& v) { return v.ok(); }) &&
         std::all_of(pairs.begin(), pairs.end(), [](const auto& p) { return p.ok(); });
}

std::string VerifyReport::describe() const {
  std::ostringstream out;
  for (const auto& v : variants) {
    out << (v.ok() ? "ok   " : "FAIL ") << v.name << ": ops " << v.ops << "/" << v.expected_ops
        << ", resends " << v.resend_events
        << (v.boundary_intact ? "" : ", boundary modified") << '\n';
  }
  for (const auto& p : pairs) {
    out << (p.ok() ? "ok   " : "FAIL ") << p.first << " == " << p.second;
    if (p.difference) {
      out << ": first difference at cell (" << p.difference->i << ", " << p.difference->j << ")";
    }
    out << '\n';
  }
  return out.str();
}

VerifyReport verify_all(const BenchConfig& cfg, std::span<const SolverEntry> solvers) {
  cfg.validate();
  if (solvers.size() < 2) {
    throw std::invalid_argument("verification needs at least two variants");
  }
  const heat::Field initial = init_field(cfg.h, cfg.w, cfg.seed);
  const auto expected_ops =
      static_cast<std::uint64_t>(cfg.h - 2) * static_cast<std::uint64_t>(cfg.t_max);

  VerifyReport report;
  std::vector<heat::Field> results;
  results.reserve(solvers.size());
  for (const auto& solver : solvers) {
    heat::Field field = initial;
    const heat::SolveResult r = solver.solve(field, cfg.t_max, cfg.workers);
    report.variants.push_back({solver.name, r.ops, expected_ops, r.resend_events,
                               heat::boundary_equal(initial, field)});
    results.push_back(std::move(field));
  }
  for (std::size_t a = 0; a < solvers.size(); ++a) {
    for (std::size_t b = a + 1; b < solvers.size(); ++b) {
      report.pairs.push_back(
          {solvers[a].name, solvers[b].name, heat::first_difference(results[a], results[b])});
    }
  }
  return report;
}

VerifyReport verify_all(const BenchConfig& cfg) {
  std::vector<SolverEntry> solvers;
  for (Variant v : cfg.variants) solvers.push_back(solver_for(v));
  return verify_all(cfg, solvers);
}

}  // namespace heatbench
