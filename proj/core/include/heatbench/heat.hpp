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

#pragma once

// Gauss-Seidel heat-equation kernel and its three schedules: the sequential
// sweep, the actor wavefront and the even/odd diagonal fork-join loop. All of
// them execute the same floating-point operations in a dependency-respecting
// order, so their results are bit-identical.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "heatbench/actor.hpp"

namespace heatbench::heat {

/// H x W grid of temperatures. Row 0, row H-1, column 0 and column W-1 are
/// boundary cells and are never written by a solver.
class Field {
 public:
  /// Throws std::invalid_argument unless h >= 3 and w >= 3.
  Field(std::size_t h, std::size_t w, double fill = 0.0);

  std::size_t height() const noexcept { return h_; }
  std::size_t width() const noexcept { return w_; }

  double& operator()(std::size_t i, std::size_t j) noexcept { return cells_[i * w_ + j]; }
  double operator()(std::size_t i, std::size_t j) const noexcept { return cells_[i * w_ + j]; }

  std::span<double> row(std::size_t i) noexcept { return {cells_.data() + i * w_, w_}; }
  std::span<const double> row(std::size_t i) const noexcept {
    return {cells_.data() + i * w_, w_};
  }
  std::span<const double> cells() const noexcept { return cells_; }
  std::span<double> cells() noexcept { return cells_; }

 private:
  std::size_t h_;
  std::size_t w_;
  std::vector<double> cells_;
};

/// One (time step, row) iteration of the sequential algorithm, 1-based in
/// both coordinates.
struct Iteration {
  int t;
  int row;
  auto operator<=>(const Iteration&) const = default;
};

struct Cell {
  std::size_t i;
  std::size_t j;
  bool operator==(const Cell&) const = default;
};

/// Hooks around each stencil op, for schedule validation. Called from worker
/// threads; implementations must be thread-safe.
class OpObserver {
 public:
  virtual ~OpObserver() = default;
  virtual void on_begin(Iteration it) = 0;
  virtual void on_end(Iteration it) = 0;
};

struct SolveResult {
  std::uint64_t ops = 0;
  std::uint64_t resend_events = 0;
};

struct WavefrontResult : SolveResult {
  std::uint64_t handler_invocations = 0;
  /// Every boundary token rests with one of its two actors, not in flight.
  bool tokens_resident = true;
};

/// Updates interior row `i` in place, left to right, so that each cell reads
/// the value just written to its left neighbour. Throws std::out_of_range
/// unless 1 <= i <= H-2.
void stencil_op(Field& field, std::size_t i);

/// T outer steps of stencil_op over rows 1..H-2. The reference result for
/// every parallel schedule. t_max <= 0 is a no-op.
SolveResult seq_solve(Field& field, int t_max);

/// Readiness of iteration (t, i): (t-1, i+1) and (t, i-1) must be complete.
/// Neighbours outside the grid (i-1 = 0, i+1 = H-1, t-1 = 0) count as
/// complete.
bool dep_ready(Iteration it, const std::set<Iteration>& done, int t_max, int h);

/// One actor per interior row, N-1 boundary tokens between neighbours.
/// Token k starts with actor k and a start message kicks actor 0.
WavefrontResult wavefront_solve(Field& field, int t_max, actor::Engine& engine,
                                OpObserver* observer = nullptr);
WavefrontResult wavefront_solve(Field& field, int t_max, std::size_t workers,
                                OpObserver* observer = nullptr);

/// Diagonal steps 1..(2T-1)+(H-3), odd rows on odd steps and even rows on
/// even steps, with a barrier between steps. Rows of one step are handed
/// out one at a time to `workers` threads (the caller is one of them).
SolveResult dataparallel_solve(Field& field, int t_max, std::size_t workers,
                               OpObserver* observer = nullptr);

/// Bit-level equality of every cell. Throws std::invalid_argument on a
/// dimension mismatch.
bool fields_equal(const Field& a, const Field& b);

/// First cell, in row-major order, whose bit patterns differ.
std::optional<Cell> first_difference(const Field& a, const Field& b);

/// Boundary cells of `a` and `b` are bit-identical.
bool boundary_equal(const Field& a, const Field& b);

}  // namespace heatbench::heat
