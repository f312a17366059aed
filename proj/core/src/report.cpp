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

#include "heatbench/report.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace heatbench {

namespace {

using nlohmann::ordered_json;

constexpr std::string_view kCsvHeader = "h,variant,reported,digits,exact,mean,min,max,runs";

std::string shortest(double x) {
  char buf[32];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, end);
}

ordered_json config_json(const BenchConfig& cfg) {
  ordered_json variants = ordered_json::array();
  for (Variant v : cfg.variants) variants.push_back(to_string(v));
  return ordered_json{{"h", cfg.h},          {"w", cfg.w},
                      {"t", cfg.t_max},      {"workers", cfg.workers},
                      {"runs", cfg.runs},    {"seed", cfg.seed},
                      {"variants", variants}, {"verify", cfg.verify}};
}

std::string config_line(const BenchConfig& cfg) {
  std::ostringstream out;
  out << "h=" << cfg.h << " w=" << cfg.w << " t=" << cfg.t_max << " workers=" << cfg.workers
      << " runs=" << cfg.runs << " seed=" << cfg.seed << " variants=";
  for (std::size_t k = 0; k < cfg.variants.size(); ++k) {
    out << (k ? "," : "") << to_string(cfg.variants[k]);
  }
  out << " verify=" << (cfg.verify ? "true" : "false");
  return out.str();
}

std::string emit_json(std::span<const RunStats> stats, const ReportMetadata* meta) {
  ordered_json results = ordered_json::array();
  for (const auto& s : stats) {
    results.push_back({{"h", s.h},
                       {"variant", s.variant},
                       {"reported", s.reported.value},
                       {"digits", s.reported.digits},
                       {"exact", s.reported.exact},
                       {"mean", s.reported.mean},
                       {"min", s.t_min},
                       {"max", s.t_max_s},
                       {"runs", s.runs},
                       {"times_s", s.times_s}});
  }
  ordered_json eff = ordered_json::array();
  for (const auto& e : efficiencies(stats)) {
    eff.push_back({{"h", e.h},
                   {"reference", e.reference},
                   {"subject", e.subject},
                   {"percent", e.percent}});
  }
  ordered_json doc;
  if (meta) {
    doc["metadata"] = {{"config", config_json(meta->config)},
                       {"warmup", meta->config.warmup},
                       {"hardware_threads", meta->hardware_threads}};
  }
  doc["results"] = std::move(results);
  doc["efficiency"] = std::move(eff);
  return doc.dump(2) + "\n";
}

std::string emit_csv(std::span<const RunStats> stats, const ReportMetadata* meta) {
  std::ostringstream out;
  if (meta) {
    out << "# config: " << config_line(meta->config) << '\n'
        << "# warmup: " << (meta->config.warmup ? "true" : "false") << '\n'
        << "# hardware_threads: " << meta->hardware_threads << '\n';
  }
  for (const auto& e : efficiencies(stats)) {
    out << "# efficiency: h=" << e.h << " " << e.reference << "/" << e.subject << "="
        << shortest(e.percent) << "%\n";
  }
  out << kCsvHeader << '\n';
  for (const auto& s : stats) {
    out << s.h << ',' << s.variant << ',' << shortest(s.reported.value) << ','
        << s.reported.digits << ',' << (s.reported.exact ? 1 : 0) << ','
        << shortest(s.reported.mean) << ',' << shortest(s.t_min) << ',' << shortest(s.t_max_s)
        << ',' << s.runs << '\n';
  }
  return out.str();
}

std::string emit_markdown(std::span<const RunStats> stats, const ReportMetadata* meta) {
  std::ostringstream out;
  if (meta) {
    out << "<!-- " << config_line(meta->config)
        << " warmup=" << (meta->config.warmup ? "true" : "false")
        << " hardware_threads=" << meta->hardware_threads << " -->\n\n";
  }
  out << "| H | variant | T, s | min, s | max, s | runs |\n"
      << "|---|---|---|---|---|---|\n";
  for (const auto& s : stats) {
    out << "| " << s.h << " | " << s.variant << " | " << format_summary(s.reported) << " | "
        << shortest(s.t_min) << " | " << shortest(s.t_max_s) << " | " << s.runs << " |\n";
  }
  const auto eff = efficiencies(stats);
  if (!eff.empty()) {
    out << "\n| H | relative efficiency | E, % |\n"
        << "|---|---|---|\n";
    for (const auto& e : eff) {
      out << "| " << e.h << " | " << e.reference << " / " << e.subject << " | "
          << shortest(e.percent) << " |\n";
    }
  }
  return out.str();
}

template <typename T>
T parse_number(std::string_view field) {
  T value{};
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw std::invalid_argument("malformed number in report: " + std::string(field));
  }
  return value;
}

std::vector<RunStats> parse_json(std::string_view text) {
  const auto doc = nlohmann::json::parse(text, nullptr, false);
  if (doc.is_discarded() || !doc.is_object() || !doc.contains("results")) {
    throw std::invalid_argument("report is not a heatbench json document");
  }
  std::vector<RunStats> out;
  for (const auto& row : doc.at("results")) {
    RunStats s;
    s.h = row.at("h").get<std::size_t>();
    s.variant = row.at("variant").get<std::string>();
    s.reported.value = row.at("reported").get<double>();
    s.reported.digits = row.at("digits").get<int>();
    s.reported.exact = row.at("exact").get<bool>();
    s.reported.mean = row.at("mean").get<double>();
    s.t_min = s.reported.min = row.at("min").get<double>();
    s.t_max_s = s.reported.max = row.at("max").get<double>();
    s.runs = row.at("runs").get<std::size_t>();
    s.times_s = row.at("times_s").get<std::vector<double>>();
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<RunStats> parse_csv(std::string_view text) {
  std::vector<RunStats> out;
  bool header_seen = false;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line.front() == '#') continue;
    if (!header_seen) {
      if (line != kCsvHeader) throw std::invalid_argument("unexpected csv header: " + line);
      header_seen = true;
      continue;
    }
    std::vector<std::string_view> cols;
    std::string_view rest = line;
    for (;;) {
      const auto comma = rest.find(',');
      cols.push_back(rest.substr(0, comma));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (cols.size() != 9) throw std::invalid_argument("csv row has wrong arity: " + line);
    RunStats s;
    s.h = parse_number<std::size_t>(cols[0]);
    s.variant = std::string(cols[1]);
    s.reported.value = parse_number<double>(cols[2]);
    s.reported.digits = parse_number<int>(cols[3]);
    s.reported.exact = parse_number<int>(cols[4]) != 0;
    s.reported.mean = parse_number<double>(cols[5]);
    s.t_min = s.reported.min = parse_number<double>(cols[6]);
    s.t_max_s = s.reported.max = parse_number<double>(cols[7]);
    s.runs = parse_number<std::size_t>(cols[8]);
    out.push_back(std::move(s));
  }
  if (!header_seen) throw std::invalid_argument("csv report has no header");
  return out;
}

}  // namespace

std::string_view to_string(Format f) {
  switch (f) {
    case Format::json:
      return "json";
    case Format::csv:
      return "csv";
    case Format::markdown:
      return "markdown";
  }
  return "unknown";
}

std::optional<Format> parse_format(std::string_view name) {
  for (Format f : {Format::json, Format::csv, Format::markdown}) {
    if (to_string(f) == name) return f;
  }
  return std::nullopt;
}

std::vector<Efficiency> efficiencies(std::span<const RunStats> stats) {
  const std::string_view subject = to_string(Variant::wavefront);
  std::vector<Efficiency> out;
  for (const auto& base : stats) {
    if (base.variant != subject) continue;
    for (const auto& other : stats) {
      if (other.h != base.h || other.variant == subject ||
          other.variant == to_string(Variant::seq)) {
        continue;
      }
      out.push_back({base.h, other.variant, base.variant,
                     relative_efficiency(other.reported.value, base.reported.value)});
    }
  }
  return out;
}

std::string emit_report(std::span<const RunStats> stats, Format format,
                        const ReportMetadata* meta) {
  switch (format) {
    case Format::json:
      return emit_json(stats, meta);
    case Format::csv:
      return emit_csv(stats, meta);
    case Format::markdown:
      return emit_markdown(stats, meta);
  }
  throw std::invalid_argument("unknown report format");
}

std::vector<RunStats> parse_report(std::string_view text, Format format) {
  switch (format) {
    case Format::json:
      return parse_json(text);
    case Format::csv:
      return parse_csv(text);
    case Format::markdown:
      break;
  }
  throw std::invalid_argument("only json and csv reports can be parsed");
}

}  // namespace heatbench
