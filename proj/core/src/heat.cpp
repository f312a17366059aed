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

#include "heatbench/heat.hpp"

#include <atomic>
#include <barrier>
#include <bit>
#include <deque>
#include <stdexcept>
#include <string>
#include <thread>

namespace heatbench::heat {

Field::Field(std::size_t h, std::size_t w, double fill) : h_(h), w_(w) {
  if (h < 3 || w < 3) {
    throw std::invalid_argument("field must be at least 3x3, got " + std::to_string(h) + "x" +
                                std::to_string(w));
  }
  cells_.assign(h * w, fill);
}

void stencil_op(Field& field, std::size_t i) {
  const std::size_t h = field.height();
  if (i < 1 || i + 2 > h) {
    throw std::out_of_range("stencil row " + std::to_string(i) + " outside [1, " +
                            std::to_string(h - 2) + "]");
  }
  const std::size_t w = field.width();
  const double* up = field.row(i - 1).data();
  const double* down = field.row(i + 1).data();
  double* cur = field.row(i).data();
  for (std::size_t j = 1; j < w - 1; ++j) {
    cur[j] = (cur[j - 1] + cur[j + 1] + up[j] + down[j]) * 0.25;
  }
}

SolveResult seq_solve(Field& field, int t_max) {
  SolveResult result;
  const std::size_t h = field.height();
  for (int t = 1; t <= t_max; ++t) {
    for (std::size_t i = 1; i < h - 1; ++i) {
      stencil_op(field, i);
      ++result.ops;
    }
  }
  return result;
}

bool dep_ready(Iteration it, const std::set<Iteration>& done, int t_max, int h) {
  const int last_row = h - 2;
  if (it.t < 1 || it.t > t_max || it.row < 1 || it.row > last_row) {
    throw std::out_of_range("iteration outside the (t, row) domain");
  }
  const bool upper_done =
      it.t == 1 || it.row + 1 > last_row || done.contains({it.t - 1, it.row + 1});
  const bool left_done = it.row - 1 < 1 || done.contains({it.t, it.row - 1});
  return upper_done && left_done;
}

namespace {

struct Wavefront {
  Wavefront(Field& field, int t_max, actor::Engine& engine, OpObserver* observer)
      : field(field),
        t_max(t_max),
        n(static_cast<int>(field.height()) - 2),
        engine(engine),
        observer(observer),
        ts(static_cast<std::size_t>(n), 1) {
    for (int id = 0; id < n; ++id) {
      actors.emplace_back([this, id](actor::Message&, actor::Actor& self) { recv(id, self); });
    }
    for (int k = 0; k + 1 < n; ++k) {
      tokens.emplace_back(&actors[static_cast<std::size_t>(k)]);
    }
    start.reset(&actors.front());
  }

  void recv(int id, actor::Actor& self) {
    const auto k = static_cast<std::size_t>(id);
    if ((id == 0 || actor::access(tokens[k - 1], self)) &&
        (id == n - 1 || actor::access(tokens[k], self)) && ts[k] <= t_max) {
      const Iteration it{ts[k], id + 1};
      if (observer) observer->on_begin(it);
      stencil_op(field, k + 1);
      if (observer) observer->on_end(it);
      ++ts[k];

      if (id != 0) engine.send(tokens[k - 1], actors[k - 1]);
      if (id != n - 1) engine.send(tokens[k], actors[k + 1]);
      // A lone actor has no neighbour to hand work back, so it drives itself.
      if (n == 1 && ts[k] <= t_max) engine.send(start, self);
    }
  }

  Field& field;
  const int t_max;
  const int n;
  actor::Engine& engine;
  OpObserver* observer;
  // Each entry is touched only by its own actor's handler.
  std::vector<int> ts;
  std::deque<actor::Actor> actors;
  std::deque<actor::Message> tokens;
  actor::Message start;
};

}  // namespace

WavefrontResult wavefront_solve(Field& field, int t_max, actor::Engine& engine,
                                OpObserver* observer) {
  WavefrontResult result;
  if (t_max <= 0) {
    return result;
  }
  Wavefront wf(field, t_max, engine, observer);
  engine.run({{&wf.start, &wf.actors.front()}});

  const auto diag = engine.diagnostics();
  result.resend_events = diag.resend_events;
  result.handler_invocations = diag.handler_invocations;
  for (int done : wf.ts) {
    result.ops += static_cast<std::uint64_t>(done - 1);
  }
  for (std::size_t k = 0; k < wf.tokens.size(); ++k) {
    const auto* owner = wf.tokens[k].owner();
    const bool at_edge = owner == &wf.actors[k] || owner == &wf.actors[k + 1];
    if (!at_edge || wf.tokens[k].in_flight()) {
      result.tokens_resident = false;
    }
  }
  return result;
}

WavefrontResult wavefront_solve(Field& field, int t_max, std::size_t workers,
                                OpObserver* observer) {
  actor::Engine engine(workers);
  return wavefront_solve(field, t_max, engine, observer);
}

SolveResult dataparallel_solve(Field& field, int t_max, std::size_t workers,
                               OpObserver* observer) {
  if (workers == 0) {
    throw std::invalid_argument("dataparallel_solve needs at least one worker");
  }
  SolveResult result;
  if (t_max <= 0) {
    return result;
  }
  const int h = static_cast<int>(field.height());
  const int steps = (2 * t_max - 1) + (h - 3);

  // Rows of diagonal step s that pass the guard, as an arithmetic range
  // first, first+2, ..., first+2*(count-1).
  struct StepRows {
    int first = 0;
    int count = 0;
  };
  auto rows_of = [h, t_max](int s) {
    int lo = (s % 2 == 1) ? 1 : 2;
    const int min_row = s - 2 * t_max + 1;
    if (lo < min_row) lo = min_row + ((min_row - lo) % 2);
    int hi = std::min(s, h - 2);
    if (hi < lo) return StepRows{};
    if ((hi - lo) % 2 != 0) --hi;
    return StepRows{lo, (hi - lo) / 2 + 1};
  };

  int step = 1;
  StepRows rows = rows_of(step);
  std::atomic<int> next{0};
  std::atomic<std::uint64_t> ops{0};

  auto advance = [&]() noexcept {
    ++step;
    rows = rows_of(step);
    next.store(0, std::memory_order_relaxed);
  };
  std::barrier sync(static_cast<std::ptrdiff_t>(workers), advance);

  auto body = [&] {
    std::uint64_t local_ops = 0;
    for (int s = 1; s <= steps; ++s) {
      const StepRows mine = rows;
      for (int k = next.fetch_add(1, std::memory_order_relaxed); k < mine.count;
           k = next.fetch_add(1, std::memory_order_relaxed)) {
        const int i = mine.first + 2 * k;
        const Iteration it{(s - i) / 2 + 1, i};
        if (observer) observer->on_begin(it);
        stencil_op(field, static_cast<std::size_t>(i));
        if (observer) observer->on_end(it);
        ++local_ops;
      }
      sync.arrive_and_wait();
    }
    ops.fetch_add(local_ops, std::memory_order_relaxed);
  };

  {
    std::vector<std::jthread> pool;
    pool.reserve(workers - 1);
    for (std::size_t k = 1; k < workers; ++k) {
      pool.emplace_back(body);
    }
    body();
  }
  result.ops = ops.load();
  return result;
}

bool fields_equal(const Field& a, const Field& b) { return !first_difference(a, b).has_value(); }

std::optional<Cell> first_difference(const Field& a, const Field& b) {
  if (a.height() != b.height() || a.width() != b.width()) {
    throw std::invalid_argument("cannot compare fields of different dimensions");
  }
  for (std::size_t i = 0; i < a.height(); ++i) {
    for (std::size_t j = 0; j < a.width(); ++j) {
      if (std::bit_cast<std::uint64_t>(a(i, j)) != std::bit_cast<std::uint64_t>(b(i, j))) {
        return Cell{i, j};
      }
    }
  }
  return std::nullopt;
}

bool boundary_equal(const Field& a, const Field& b) {
  if (a.height() != b.height() || a.width() != b.width()) {
    throw std::invalid_argument("cannot compare fields of different dimensions");
  }
  const std::size_t h = a.height();
  const std::size_t w = a.width();
  auto same = [&](std::size_t i, std::size_t j) {
    return std::bit_cast<std::uint64_t>(a(i, j)) == std::bit_cast<std::uint64_t>(b(i, j));
  };
  for (std::size_t j = 0; j < w; ++j) {
    if (!same(0, j) || !same(h - 1, j)) return false;
  }
  for (std::size_t i = 0; i < h; ++i) {
    if (!same(i, 0) || !same(i, w - 1)) return false;
  }
  return true;
}

}  // namespace heatbench::heat
