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

#include "qcsearch/random.hpp"

#include <array>

namespace qcsearch {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

RngSeed RngSeed::child(std::uint64_t tag) const {
  return RngSeed{seed, mix64(mix64(stream) ^ (tag * 0xd6e8feb86659fd93ULL))};
}

Engine make_engine(const RngSeed& rng) {
  const std::uint64_t a = mix64(rng.seed);
  const std::uint64_t b = mix64(a ^ mix64(rng.stream ^ 0x5851f42d4c957f2dULL));
  std::seed_seq seq{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a >> 32),
                    static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32)};
  return Engine(seq);
}

StateVector haar_random_state(int n, const RngSeed& rng) {
  check_qubit_count(n);
  Engine engine = make_engine(rng);
  std::normal_distribution<double> normal(0.0, 1.0);
  Vector v(static_cast<Eigen::Index>(dimension(n)));
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double re = normal(engine);
    const double im = normal(engine);
    v[i] = Complex(re, im);
  }
  return StateVector::normalized(std::move(v));
}

UnitaryMatrix haar_random_unitary(int n, const RngSeed& rng) {
  check_qubit_count(n);
  Engine engine = make_engine(rng);
  std::normal_distribution<double> normal(0.0, 1.0);
  const auto d = static_cast<Eigen::Index>(dimension(n));
  Matrix ginibre(d, d);
  for (Eigen::Index r = 0; r < d; ++r) {
    for (Eigen::Index c = 0; c < d; ++c) {
      const double re = normal(engine);
      const double im = normal(engine);
      ginibre(r, c) = Complex(re, im);
    }
  }
  Eigen::HouseholderQR<Matrix> qr(ginibre);
  Matrix q = qr.householderQ() * Matrix::Identity(d, d);
  const Matrix& packed = qr.matrixQR();
  for (Eigen::Index i = 0; i < d; ++i) {
    const Complex r = packed(i, i);
    const double mag = std::abs(r);
    if (mag > 0.0) q.col(i) *= r / mag;
  }
  return UnitaryMatrix::from_matrix(std::move(q));
}

}  // namespace qcsearch
