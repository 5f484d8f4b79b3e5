// Copyright 2026 The qcsearch Authors
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

#include <numbers>
#include <random>

#include <benchmark/benchmark.h>

#include "qcsearch/grape.hpp"
#include "qcsearch/search.hpp"

namespace {

using namespace qcsearch;

struct Problem {
  GateConfiguration config;
  ParameterizedCircuit circuit;
  Target target;
};

Problem make_problem(TaskKind task, int n, std::size_t size) {
  auto config = sample_config(n, size, GateKind::CNOT, {11, 0});
  std::mt19937_64 eng(12);
  std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
  RotationParams p;
  p.angles.resize(param_count(n, size));
  for (double& a : p.angles) a = angle(eng);
  ParameterizedCircuit circuit(config, p);
  return {config, circuit, haar_target(task, n, {13, 0})};
}

// Args: task (0 = state preparation, 1 = unitary), n, N.
void BM_FidelityGradient(benchmark::State& state) {
  const auto task = state.range(0) ? TaskKind::UnitarySynthesis : TaskKind::StatePrep;
  const auto prob = make_problem(task, static_cast<int>(state.range(1)),
                                 static_cast<std::size_t>(state.range(2)));
  for (auto _ : state) benchmark::DoNotOptimize(fidelity_gradient(prob.circuit, prob.target));
}
BENCHMARK(BM_FidelityGradient)
    ->Args({0, 4, 6})
    ->Args({0, 6, 29})
    ->Args({0, 8, 124})
    ->Args({1, 3, 14})
    ->Args({1, 4, 61});

void BM_Fidelity(benchmark::State& state) {
  const auto task = state.range(0) ? TaskKind::UnitarySynthesis : TaskKind::StatePrep;
  const auto prob = make_problem(task, static_cast<int>(state.range(1)),
                                 static_cast<std::size_t>(state.range(2)));
  for (auto _ : state) benchmark::DoNotOptimize(fidelity(prob.circuit, prob.target));
}
BENCHMARK(BM_Fidelity)->Args({0, 4, 6})->Args({1, 3, 14})->Args({1, 4, 61});

void BM_OptimizeTwoQubitUnitary(benchmark::State& state) {
  const GateConfiguration config(2, GateKind::CNOT,
                                 std::vector<EntanglerPlacement>(3, EntanglerPlacement{0, 1}));
  const auto target = haar_target(TaskKind::UnitarySynthesis, 2, {14, 0});
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(optimize(config, target, {}, {15, seed++}));
  }
}
BENCHMARK(BM_OptimizeTwoQubitUnitary)->Unit(benchmark::kMillisecond);

}  // namespace
