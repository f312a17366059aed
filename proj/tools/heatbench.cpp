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

// heatbench: times the sequential, actor wavefront and diagonal fork-join
// heat solvers and prints a json, csv or markdown report.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "heatbench/harness.hpp"
#include "heatbench/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::size_t h = 0;
  std::optional<std::size_t> w;
  std::optional<int> t;
  std::string variant = "all";
  std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
  std::size_t runs = 19;
  std::uint64_t seed = 1;
  std::string format = "json";
  bool verify = false;
  bool no_warmup = false;
};

int run(const Options& opt) {
  using namespace heatbench;

  BenchConfig cfg = BenchConfig::for_height(opt.h);
  if (opt.w) cfg.w = *opt.w;
  if (opt.t) cfg.t_max = *opt.t;
  cfg.workers = opt.workers;
  cfg.runs = opt.runs;
  cfg.seed = opt.seed;
  cfg.verify = opt.verify;
  cfg.warmup = !opt.no_warmup;
  if (opt.variant != "all") {
    cfg.variants = {*parse_variant(opt.variant)};
  }
  const Format format = *parse_format(opt.format);

  cfg.validate();

  if (cfg.verify) {
    // Every configured variant is checked against the sequential oracle.
    std::vector<SolverEntry> solvers{solver_for(Variant::seq)};
    for (Variant v : cfg.variants) {
      if (v != Variant::seq) solvers.push_back(solver_for(v));
    }
    if (solvers.size() > 1) {
      const VerifyReport report = verify_all(cfg, solvers);
      std::cerr << report.describe();
      if (!report.passed()) {
        std::cerr << "heatbench: verification failed\n";
        return kExitVerifyFailed;
      }
    }
  }

  std::vector<RunStats> stats;
  for (Variant v : cfg.variants) {
    stats.push_back(time_variant(cfg, v));
  }
  const ReportMetadata meta{cfg, std::thread::hardware_concurrency()};
  std::cout << emit_report(stats, format, &meta);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"Heat-equation wavefront benchmark for the actor runtime"};
  // --h is the grid height, so help is long-form only.
  app.set_help_flag("--help", "Print this help message and exit");
  app.add_option("--h", opt.h, "Grid height H")->required();
  app.add_option("--w", opt.w, "Grid width W (default 2H)");
  app.add_option("--t", opt.t, "Time steps T (default 2H)");
  app.add_option("--variant", opt.variant, "Solver to run")
      ->check(CLI::IsMember({"seq", "wavefront", "dataparallel", "all"}));
  app.add_option("--workers", opt.workers, "Worker threads P")->capture_default_str();
  app.add_option("--runs", opt.runs, "Timed runs per series")->capture_default_str();
  app.add_option("--seed", opt.seed, "Seed of the initial field")->capture_default_str();
  app.add_option("--format", opt.format, "Report format")
      ->check(CLI::IsMember({"json", "csv", "markdown"}))
      ->capture_default_str();
  app.add_flag("--verify", opt.verify, "Check every variant against the sequential solver");
  app.add_flag("--no-warmup", opt.no_warmup, "Skip the untimed warm-up run");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    return run(opt);
  } catch (const std::invalid_argument& e) {
    std::cerr << "heatbench: " << e.what() << '\n';
    return kExitUsage;
  }
}
