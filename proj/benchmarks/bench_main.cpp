// Copyright 2026 The addon-rm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "addon/fptas.hpp"
#include "addon/harness.hpp"
#include "addon/learner.hpp"
#include "addon/oracle.hpp"
#include "addon/sim.hpp"

namespace {

using namespace addon;

const Instance& medium() {
  static const Instance inst = bundled_scenario(EffectLevel::kMedium, 6);
  return inst;
}

void BM_SubproblemGrid(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(solve_subproblem_grid(medium(), k));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SubproblemGrid)->RangeMultiplier(4)->Range(10, 2560)->Complexity();

void BM_FptasSolve(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(fptas_solve(medium(), k));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FptasSolve)->RangeMultiplier(4)->Range(10, 2560)->Complexity();

void BM_Oracle(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_solve(medium()));
}
BENCHMARK(BM_Oracle);

void BM_SimulatePeriod(benchmark::State& state) {
  const Policy policy = brute_force_solve(medium()).policy;
  const DrawStream stream(42);
  std::uint64_t t = 0;
  for (auto _ : state) benchmark::DoNotOptimize(simulate_period(medium(), policy, stream, ++t));
}
BENCHMARK(BM_SimulatePeriod);

void BM_LearningRun(benchmark::State& state) {
  LearningConfig cfg;
  cfg.horizon = static_cast<std::uint64_t>(state.range(0));
  cfg.ucb_scale = 0.125;
  cfg.seed = 7;
  for (auto _ : state) benchmark::DoNotOptimize(run_learning(medium(), cfg));
}
BENCHMARK(BM_LearningRun)->Arg(672)->Arg(8760)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
