// SPDX-License-Identifier: Apache-2.0
//
// infoflow: information flows in LTI feedback loops over Gaussian channels
// Copyright (C) 2026 The infoflow authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <benchmark/benchmark.h>

#include "infoflow/gaussian_net.hpp"
#include "infoflow/rates.hpp"
#include "infoflow/simulate.hpp"
#include "support/oracles.hpp"

using namespace infoflow;

static void BM_FiniteReport(benchmark::State& state) {
  const auto loop = testing::system_b();
  const auto n = static_cast<std::size_t>(state.range(0));
  FiniteOptions opts;
  opts.oracle_limit = 0;
  for (auto _ : state) benchmark::DoNotOptimize(finite_report(loop, n, opts));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FiniteReport)->RangeMultiplier(2)->Range(64, 1024)->Complexity()->Unit(benchmark::kMillisecond);

static void BM_DefinitionOracle(benchmark::State& state) {
  const auto loop = testing::system_b();
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(finite_report(loop, n));
}
BENCHMARK(BM_DefinitionOracle)->Arg(8)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

static void BM_ClosedFormRates(benchmark::State& state) {
  const auto loop = testing::two_unstable_poles();
  QuadratureSpec quad;
  quad.panels = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(closed_form_rates(loop, quad));
}
BENCHMARK(BM_ClosedFormRates)->Arg(16)->Arg(64)->Arg(256);

static void BM_Simulate(benchmark::State& state) {
  SimulationConfig c;
  c.loop = testing::system_b();
  c.n = 1024;
  c.trials = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(simulate_loop(c));
}
BENCHMARK(BM_Simulate)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
