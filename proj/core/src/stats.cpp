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

#include "heatbench/stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <stdexcept>

namespace heatbench {

namespace {

constexpr int kMaxDigits = 17;

double pow10(int e) { return std::pow(10.0, e); }

}  // namespace

double round_to_digits(double x, int digits) {
  if (digits >= 0) {
    const double scale = pow10(digits);
    return std::round(x * scale) / scale;
  }
  const double scale = pow10(-digits);
  return std::round(x / scale) * scale;
}

Summary summarize(std::span<const double> series) {
  if (series.empty()) {
    throw std::invalid_argument("cannot summarize an empty series");
  }
  Summary s;
  const auto [lo, hi] = std::minmax_element(series.begin(), series.end());
  s.min = *lo;
  s.max = *hi;
  s.mean = std::accumulate(series.begin(), series.end(), 0.0) / static_cast<double>(series.size());
  // Summation error can push the mean of a near-constant series past an end.
  s.mean = std::clamp(s.mean, s.min, s.max);

  if (s.min == s.max) {
    s.value = s.mean;
    s.digits = kMaxDigits;
    s.exact = true;
    return s;
  }

  const double magnitude = std::max(std::abs(s.min), std::abs(s.max));
  const int coarsest = -static_cast<int>(std::floor(std::log10(magnitude))) - 2;
  for (int d = coarsest; d <= kMaxDigits; ++d) {
    const double value = round_to_digits(s.mean, d);
    const double half = 0.5 * pow10(-d);
    if (value - half >= s.min && value + half <= s.max) {
      s.value = value;
      s.digits = d;
      return s;
    }
  }
  // Spread below the finest representable digit: report the mean as is.
  s.value = s.mean;
  s.digits = kMaxDigits;
  s.exact = true;
  return s;
}

std::string format_summary(const Summary& s) {
  char buf[64];
  if (s.exact) {
    std::snprintf(buf, sizeof buf, "%.17g", s.value);
  } else {
    std::snprintf(buf, sizeof buf, "%.*f", std::max(s.digits, 0), s.value);
  }
  return buf;
}

double relative_efficiency(double t_other, double t_subject) {
  if (!(t_subject > 0.0)) {
    throw std::invalid_argument("relative efficiency needs a positive reference time");
  }
  const double percent = 100.0 * t_other / t_subject;
  if (percent == 0.0) {
    return 0.0;
  }
  const int exponent = static_cast<int>(std::floor(std::log10(std::abs(percent))));
  return round_to_digits(percent, 1 - exponent);
}

}  // namespace heatbench
