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

// Report rendering. The JSON layout is documented in docs/report-format.md.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "heatbench/harness.hpp"

namespace heatbench {

enum class Format { json, csv, markdown };

std::string_view to_string(Format f);
std::optional<Format> parse_format(std::string_view name);

struct ReportMetadata {
  BenchConfig config;
  unsigned hardware_threads = 0;
};

/// Time of another parallel variant relative to the wavefront, in percent.
struct Efficiency {
  std::size_t h = 0;
  std::string reference;
  std::string subject;
  double percent = 0.0;
};

/// One entry per (H, parallel variant other than wavefront) when the
/// wavefront was timed at the same H.
std::vector<Efficiency> efficiencies(std::span<const RunStats> stats);

std::string emit_report(std::span<const RunStats> stats, Format format,
                        const ReportMetadata* meta = nullptr);

/// Reads back the result rows of a json or csv report. Throws
/// std::invalid_argument for markdown or malformed input.
std::vector<RunStats> parse_report(std::string_view text, Format format);

}  // namespace heatbench
