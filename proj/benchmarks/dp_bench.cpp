// Copyright 2026 The resopt Authors
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

#include <benchmark/benchmark.h>

#include <array>
#include <cstddef>

#include "resopt/dp.hpp"
#include "resopt/grid.hpp"
#include "resopt/models.hpp"
#include "resopt/reduced.hpp"
#include "synthetic.hpp"

namespace {

// One-tank gas model, 120 monthly steps, 25 controls; range(0) state nodes.
void BM_SolveGasOneTank(benchmark::State& state) {
  const auto c = resopt::synthetic::gas_case();
  const resopt::GasOneTankModel model(c.params);
  const auto sc = resopt::synthetic::gas_scenario(120, 25);
  const auto nodes = static_cast<std::size_t>(state.range(0));
  const resopt::Grid grid(
      {resopt::Grid::uniform_axis(resopt::min_gas_volume(c.params), c.v_g0, nodes)});
  for (auto _ : state) {
    auto sol = resopt::solve_dp(model, grid, sc);
    benchmark::DoNotOptimize(sol);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SolveGasOneTank)
    ->RangeMultiplier(4)
    ->Range(64, 4096)
    ->Unit(benchmark::kMillisecond)
    ->Complexity(benchmark::oN);

// Two-tank gas model, 60 steps, 9 controls; range(0) nodes per dimension.
void BM_SolveGasTwoTank(benchmark::State& state) {
  const auto c = resopt::synthetic::two_tank_case();
  const resopt::GasTwoTankModel model(c.params);
  const auto sc = resopt::synthetic::gas_scenario(60, 9);
  const auto nodes = static_cast<std::size_t>(state.range(0));
  const resopt::Grid grid(
      {resopt::Grid::uniform_axis(resopt::min_gas_volume(c.params.tank1), c.x0[0], nodes),
       resopt::Grid::uniform_axis(resopt::min_gas_volume(c.params.tank2), c.x0[1], nodes)});
  for (auto _ : state) {
    auto sol = resopt::solve_dp(model, grid, sc);
    benchmark::DoNotOptimize(sol);
  }
  state.SetComplexityN(state.range(0) * state.range(0));
}
BENCHMARK(BM_SolveGasTwoTank)
    ->RangeMultiplier(2)
    ->Range(8, 32)
    ->Unit(benchmark::kMillisecond)
    ->Complexity(benchmark::oN);

}  // namespace
