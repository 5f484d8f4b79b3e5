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

#include <vector>

#include <benchmark/benchmark.h>

#include "qcsearch/kernels.hpp"
#include "qcsearch/random.hpp"

namespace {

using qcsearch::Complex;

std::vector<Complex> random_buffer(int bits) {
  const auto s = qcsearch::haar_random_state(bits, {1, 0});
  return {s.amplitudes().data(), s.amplitudes().data() + s.dim()};
}

void BM_Apply1q(benchmark::State& state) {
  const int bits = static_cast<int>(state.range(0));
  auto buf = random_buffer(bits);
  const Eigen::Matrix2cd g = qcsearch::haar_random_unitary(1, {2, 0}).matrix();
  unsigned bit = 0;
  for (auto _ : state) {
    qcsearch::kernels::apply_1q(buf, bit, g);
    bit = (bit + 1) % static_cast<unsigned>(bits);
    benchmark::ClobberMemory();
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(buf.size()));
}
BENCHMARK(BM_Apply1q)->DenseRange(4, 16, 4);

void BM_Apply2q(benchmark::State& state) {
  const int bits = static_cast<int>(state.range(0));
  auto buf = random_buffer(bits);
  const Eigen::Matrix4cd g = qcsearch::haar_random_unitary(2, {3, 0}).matrix();
  for (auto _ : state) {
    qcsearch::kernels::apply_2q(buf, 1, 0, g);
    benchmark::ClobberMemory();
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(buf.size()));
}
BENCHMARK(BM_Apply2q)->DenseRange(4, 16, 4);

void BM_ApplyCnot(benchmark::State& state) {
  const int bits = static_cast<int>(state.range(0));
  auto buf = random_buffer(bits);
  for (auto _ : state) {
    qcsearch::kernels::apply_cnot(buf, 2, 0);
    benchmark::ClobberMemory();
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(buf.size()));
}
BENCHMARK(BM_ApplyCnot)->DenseRange(4, 16, 4);

void BM_Environment1q(benchmark::State& state) {
  const int bits = static_cast<int>(state.range(0));
  const auto a = random_buffer(bits);
  const auto b = random_buffer(bits);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qcsearch::kernels::environment_1q(a, b, 1));
  }
}
BENCHMARK(BM_Environment1q)->DenseRange(4, 16, 4);

}  // namespace
