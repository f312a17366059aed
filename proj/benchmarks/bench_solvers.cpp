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

#include <benchmark/benchmark.h>

#include "heatbench/harness.hpp"
#include "heatbench/heat.hpp"

namespace heat = heatbench::heat;

static void BM_StencilRow(benchmark::State& state) {
  const auto w = static_cast<std::size_t>(state.range(0));
  heat::Field f = heatbench::init_field(3, w, 1);
  for (auto _ : state) {
    heat::stencil_op(f, 1);
    benchmark::DoNotOptimize(f.row(1).data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(w - 2));
}
BENCHMARK(BM_StencilRow)->Arg(64)->Arg(800)->Arg(2000);

// H is the argument; W = T = 2H. The field is reseeded outside the timer.
template <typename Solve>
static void run_solver(benchmark::State& state, Solve solve) {
  const auto h = static_cast<std::size_t>(state.range(0));
  const auto p = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) {
    state.PauseTiming();
    heat::Field f = heatbench::init_field(h, 2 * h, 1);
    state.ResumeTiming();
    solve(f, static_cast<int>(2 * h), p);
  }
  state.counters["cells/s"] = benchmark::Counter(
      static_cast<double>(state.iterations()) * static_cast<double>((h - 2) * (2 * h - 2) * 2 * h),
      benchmark::Counter::kIsRate);
}

static void BM_Sequential(benchmark::State& state) {
  run_solver(state, [](heat::Field& f, int t, std::size_t) { heat::seq_solve(f, t); });
}
static void BM_Wavefront(benchmark::State& state) {
  run_solver(state, [](heat::Field& f, int t, std::size_t p) { heat::wavefront_solve(f, t, p); });
}
static void BM_Dataparallel(benchmark::State& state) {
  run_solver(state,
             [](heat::Field& f, int t, std::size_t p) { heat::dataparallel_solve(f, t, p); });
}

BENCHMARK(BM_Sequential)->Args({100, 1})->Args({200, 1})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Wavefront)
    ->ArgsProduct({{100, 200}, {1, 2, 4}})
    ->UseRealTime()
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Dataparallel)
    ->ArgsProduct({{100, 200}, {1, 2, 4}})
    ->UseRealTime()
    ->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
