// Copyright 2026 The Thompson Ends Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <vector>

#include <benchmark/benchmark.h>

#include "thompson/cosetgraph.h"
#include "thompson/elements.h"
#include "thompson/words.h"

namespace thompson {
namespace {

void BM_Step(benchmark::State& state) {
  const CosetBall ball =
      Explore(GroupClass::kV, StandardGeneratorSet(GroupClass::kV), 6);
  const auto& gens = ball.generators();
  std::vector<CosetState> states;
  for (VertexId v = 0; v < ball.size() && states.size() < 256; ++v) {
    states.push_back(ball.state(v));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        Step(states[i % states.size()], gens[i % gens.size()].map));
    ++i;
  }
}
BENCHMARK(BM_Step);

void BM_Explore(benchmark::State& state) {
  const auto group = static_cast<GroupClass>(state.range(0));
  const int radius = static_cast<int>(state.range(1));
  const auto gens = StandardGeneratorSet(group);
  std::size_t vertices = 0;
  for (auto _ : state) {
    const CosetBall ball = Explore(group, gens, radius);
    vertices = ball.size();
  }
  state.counters["vertices"] = static_cast<double>(vertices);
  state.counters["vertices/s"] = benchmark::Counter(
      static_cast<double>(vertices) * state.iterations(),
      benchmark::Counter::kIsRate);
}
BENCHMARK(BM_Explore)
    ->Args({static_cast<int>(GroupClass::kF), 8})
    ->Args({static_cast<int>(GroupClass::kT), 6})
    ->Args({static_cast<int>(GroupClass::kV), 6})
    ->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace thompson
