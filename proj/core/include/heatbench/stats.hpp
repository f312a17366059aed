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

#include <span>
#include <string>

namespace heatbench {

/// Significant-digit summary of a timing series.
///
/// The mean is rounded to `digits` decimal places (negative values round to
/// tens, hundreds, ...). `digits` is the coarsest precision whose rounding
/// cell [value - 0.5*10^-digits, value + 0.5*10^-digits] lies inside
/// [min, max]: every digit shown is then guaranteed by the spread of the
/// series. A zero-spread series keeps the mean at full precision and
/// reports `exact = true`.
struct Summary {
  double value = 0.0;
  int digits = 0;
  bool exact = false;
  double mean = 0.0;
  double min = 0.0;
  double max = 0.0;
};

/// Throws std::invalid_argument on an empty series.
Summary summarize(std::span<const double> series);

/// Rounds `x` to `digits` decimal places, half away from zero.
double round_to_digits(double x, int digits);

/// Renders a summary with exactly the digits it guarantees.
std::string format_summary(const Summary& s);

/// 100 * t_other / t_subject, rounded to two significant figures. Throws
/// std::invalid_argument unless t_subject > 0.
double relative_efficiency(double t_other, double t_subject);

}  // namespace heatbench
