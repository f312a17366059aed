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

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "heatbench/heat.hpp"
#include "heatbench/stats.hpp"

namespace heatbench {

enum class Variant { seq, wavefront, dataparallel };

inline constexpr Variant kAllVariants[] = {Variant::seq, Variant::wavefront,
                                           Variant::dataparallel};

std::string_view to_string(Variant v);
std::optional<Variant> parse_variant(std::string_view name);

struct BenchConfig {
  std::size_t h = 0;
  std::size_t w = 0;
  int t_max = 0;
  std::size_t workers = 1;
  std::size_t runs = 19;
  std::uint64_t seed = 0;
  std::vector<Variant> variants{std::begin(kAllVariants), std::end(kAllVariants)};
  bool verify = false;
  bool warmup = true;

  /// W = 2H and T = 2H, everything else at its default.
  static BenchConfig for_height(std::size_t h);

  /// Throws std::invalid_argument on h < 3, w < 3, t_max < 1, runs < 1 or
  /// workers < 1.
  void validate() const;
};

/// Fills every cell, boundary included, with uniform values in [0, 1) drawn
/// from std::mt19937_64 seeded with `seed`. Each draw keeps the top 53 bits
/// and scales by 2^-53, so the field is identical on every platform.
heat::Field init_field(std::size_t h, std::size_t w, std::uint64_t seed);

using Solver = std::function<heat::SolveResult(heat::Field&, int t_max, std::size_t workers)>;

struct SolverEntry {
  std::string name;
  Solver solve;
};

SolverEntry solver_for(Variant v);

struct RunStats {
  std::string variant;
  std::size_t h = 0;
  std::size_t runs = 0;
  std::vector<double> times_s;
  double t_min = 0.0;
  double t_max_s = 0.0;
  Summary reported;
};

/// Runs `cfg.runs` timed solves on freshly seeded fields, after one untimed
/// warm-up solve when `cfg.warmup` is set. Only the solve call is timed.
RunStats time_variant(const BenchConfig& cfg, const SolverEntry& solver);

/// Throws std::invalid_argument if `v` is not among `cfg.variants`.
RunStats time_variant(const BenchConfig& cfg, Variant v);

struct VariantCheck {
  std::string name;
  std::uint64_t ops = 0;
  std::uint64_t expected_ops = 0;
  std::uint64_t resend_events = 0;
  bool boundary_intact = true;

  bool ok() const { return ops == expected_ops && resend_events == 0 && boundary_intact; }
};

struct PairCheck {
  std::string first;
  std::string second;
  std::optional<heat::Cell> difference;

  bool ok() const { return !difference.has_value(); }
};

struct VerifyReport {
  std::vector<VariantCheck> variants;
  std::vector<PairCheck> pairs;

  bool passed() const;
  std::string describe() const;
};

/// Solves once per variant on identically seeded fields and compares every
/// pair cell by cell. Throws std::invalid_argument with fewer than two
/// solvers.
VerifyReport verify_all(const BenchConfig& cfg, std::span<const SolverEntry> solvers);
VerifyReport verify_all(const BenchConfig& cfg);

}  // namespace heatbench
