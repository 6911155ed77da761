// Copyright 2026 The fuzzytp Authors
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

// Serial reference against the OpenMP kernels on the 3 x 3 benchmark.
//
//   ./parallel_bench --benchmark_filter=MonteCarlo

#include <benchmark/benchmark.h>

#include "fuzzytp/execution.h"
#include "fuzzytp/fuzzy_solver.h"
#include "fuzzytp/monte_carlo.h"

namespace fuzzytp {
namespace {

GaussianModel Benchmark() {
  auto specs = [](std::initializer_list<double> means) {
    std::vector<GaussianSpec> out;
    for (double m : means) out.push_back({m, 10.0});
    return out;
  };
  GaussianModel m;
  m.supply_max = specs({460, 460, 610});
  m.demand_max = specs({410, 510, 610});
  m.purchase_min = specs({440, 440, 590});
  m.sale_min = specs({390, 490, 590});
  m.purchase_price_reduced = specs({590, 480, 570});
  m.sale_price_reduced = specs({990, 1100, 1180});
  m.transport_cost = Grid<GaussianSpec>(3, 3);
  m.transport_cost.values() = specs({100, 30, 100, 110, 36, 405, 120, 148, 11});
  return m;
}

void MonteCarlo(benchmark::State& state, Execution execution) {
  const GaussianModel model = Benchmark();
  const auto steps = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(RunRange(model, 0, steps, 42, execution));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
  state.counters["threads"] = execution == Execution::kParallel ? MaxThreads() : 1;
}

void FuzzySolve(benchmark::State& state, Execution execution) {
  const DistributionProblem problem = Benchmark().ToFuzzy();
  const AlphaGrid grid = AlphaGrid::Uniform(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(SolveFuzzy(problem, grid, {execution, {}}));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
  state.counters["threads"] = execution == Execution::kParallel ? MaxThreads() : 1;
}

BENCHMARK_CAPTURE(MonteCarlo, serial, Execution::kSerial)->Arg(1000)->Arg(10000)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(MonteCarlo, parallel, Execution::kParallel)->Arg(1000)->Arg(10000)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(FuzzySolve, serial, Execution::kSerial)->Arg(11)->Arg(1001)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(FuzzySolve, parallel, Execution::kParallel)->Arg(11)->Arg(1001)
    ->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace fuzzytp

BENCHMARK_MAIN();
