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

#include <deque>

#include "heatbench/actor.hpp"

using heatbench::actor::Actor;
using heatbench::actor::Engine;
using heatbench::actor::Envelope;
using heatbench::actor::Message;

// Round-trip latency of one message bouncing between two actors.
static void BM_PingPong(benchmark::State& state) {
  const auto workers = static_cast<std::size_t>(state.range(0));
  constexpr int kBounces = 10000;
  Engine e(workers);
  for (auto _ : state) {
    Envelope<int> ball(nullptr, 0);
    std::deque<Actor> pair;
    for (int side = 0; side < 2; ++side) {
      pair.emplace_back([&, side](Message& m, Actor&) {
        auto& b = static_cast<Envelope<int>&>(m);
        if (b.value++ < kBounces) e.send(m, pair[static_cast<std::size_t>(1 - side)]);
      });
    }
    e.run({{&ball, &pair[0]}});
  }
  state.SetItemsProcessed(state.iterations() * (kBounces + 1));
}
BENCHMARK(BM_PingPong)->Arg(1)->Arg(2)->Arg(4)->UseRealTime();

// Many independent message chains fanned over the pool.
static void BM_FanOut(benchmark::State& state) {
  const auto workers = static_cast<std::size_t>(state.range(0));
  constexpr int kActors = 64;
  constexpr int kMessages = 1024;
  constexpr int kHops = 16;
  Engine e(workers);
  for (auto _ : state) {
    std::deque<Actor> actors;
    std::deque<Envelope<int>> msgs;
    for (int k = 0; k < kActors; ++k) {
      actors.emplace_back([&, k](Message& m, Actor&) {
        auto& hops = static_cast<Envelope<int>&>(m);
        if (hops.value-- > 0) e.send(m, actors[static_cast<std::size_t>((k + 1) % kActors)]);
      });
    }
    std::vector<heatbench::actor::Delivery> boot;
    for (int k = 0; k < kMessages; ++k) {
      msgs.emplace_back(nullptr, kHops);
      boot.push_back({&msgs.back(), &actors[static_cast<std::size_t>(k % kActors)]});
    }
    e.run(boot);
  }
  state.SetItemsProcessed(state.iterations() * kMessages * (kHops + 1));
}
BENCHMARK(BM_FanOut)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->UseRealTime();
