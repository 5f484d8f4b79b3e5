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

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "qcsearch/random.hpp"
#include "qcsearch/tensor.hpp"
#include "unit/reference.hpp"

using namespace qcsearch;
using qcsearch::testing::C;

namespace {

// One-sample Kolmogorov-Smirnov statistic against Uniform[0, 1].
double ks_uniform(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  const double n = static_cast<double>(xs.size());
  double d = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    d = std::max({d, (i + 1) / n - xs[i], xs[i] - i / n});
  }
  return d;
}

double ks_two_sample(std::vector<double> a, std::vector<double> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    const double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= x) ++i;
    while (j < b.size() && b[j] <= x) ++j;
    d = std::max(d, std::abs(double(i) / a.size() - double(j) / b.size()));
  }
  return d;
}

Eigen::Matrix4cd cnot_matrix() {
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1;
  return m;
}

UnitaryMatrix one_qubit(const Eigen::Matrix2cd& m) { return UnitaryMatrix::from_matrix(m); }

}  // namespace

TEST_SUITE("tensor") {

TEST_CASE("haar states are normalized and reproducible") {
  for (int n = 1; n <= kMaxQubits; ++n) {
    const auto a = haar_random_state(n, {42, static_cast<std::uint64_t>(n)});
    const auto b = haar_random_state(n, {42, static_cast<std::uint64_t>(n)});
    CHECK(a.dim() == dimension(n));
    CHECK(std::abs(a.norm() - 1.0) < 1e-14);
    CHECK(a.amplitudes() == b.amplitudes());
  }
  CHECK(haar_random_state(2, {1, 0}).amplitudes() != haar_random_state(2, {1, 1}).amplitudes());
  CHECK_THROWS_AS(haar_random_state(0, {1, 0}), std::domain_error);
  CHECK_THROWS_AS(haar_random_state(kMaxQubits + 1, {1, 0}), std::domain_error);
}

TEST_CASE("haar state components are exchangeable") {
  // Every basis component of a Haar state has E|a_i|^2 = 1/d.
  constexpr int kSamples = 10000;
  std::vector<double> p0(kSamples);
  for (int s = 0; s < kSamples; ++s) {
    p0[s] = std::norm(haar_random_state(2, {2024, static_cast<std::uint64_t>(s)})[0]);
  }
  double mean = 0.0;
  for (double v : p0) mean += v;
  mean /= kSamples;
  double var = 0.0;
  for (double v : p0) var += (v - mean) * (v - mean);
  var /= kSamples - 1;
  const double se = std::sqrt(var / kSamples);
  CHECK(std::abs(mean - 0.25) < 3 * se);
}

TEST_CASE("haar states are invariant under a fixed unitary") {
  // First and second moments of |a_i|^2 for psi and V psi must agree.
  constexpr int kSamples = 8000;
  const auto v = haar_random_unitary(2, {77, 0});
  std::array<double, 4> m1{}, m2{}, w1{}, w2{};
  for (int s = 0; s < kSamples; ++s) {
    const auto psi = haar_random_state(2, {78, static_cast<std::uint64_t>(s)});
    const auto phi = apply(v, haar_random_state(2, {79, static_cast<std::uint64_t>(s)}));
    for (int i = 0; i < 4; ++i) {
      const double a = std::norm(psi[i]), b = std::norm(phi[i]);
      m1[i] += a / kSamples;
      m2[i] += a * a / kSamples;
      w1[i] += b / kSamples;
      w2[i] += b * b / kSamples;
    }
  }
  // Exact values for d = 4: E|a|^2 = 1/4, E|a|^4 = 2/(d(d+1)) = 1/10.
  // Standard deviations of |a|^2 and |a|^4 are about 0.19 and 0.13.
  const double tol1 = 4 * 0.19 / std::sqrt(double(kSamples));
  const double tol2 = 4 * 0.13 / std::sqrt(double(kSamples));
  for (int i = 0; i < 4; ++i) {
    CHECK(std::abs(m1[i] - w1[i]) < 2 * tol1);
    CHECK(std::abs(m2[i] - w2[i]) < 2 * tol2);
    CHECK(std::abs(w1[i] - 0.25) < tol1);
    CHECK(std::abs(w2[i] - 0.1) < tol2);
  }
}

TEST_CASE("haar unitaries are unitary and reproducible") {
  for (int n = 1; n <= 6; ++n) {
    for (std::uint64_t s = 0; s < 5; ++s) {
      const auto u = haar_random_unitary(n, {9, s});
      CHECK(u.unitarity_error() < 1e-12);
      CHECK(u.matrix() == haar_random_unitary(n, {9, s}).matrix());
    }
  }
  CHECK_THROWS_AS(haar_random_unitary(0, {1, 0}), std::domain_error);
}

TEST_CASE("haar unitary marginal matches the Euler-angle sampler") {
  // For SU(2) Haar measure, U = Rz(a) Ry(b) Rz(c) with a, c uniform and
  // cos(b) uniform on [-1, 1]; |U_00|^2 is then uniform on [0, 1].
  constexpr int kSamples = 10000;
  std::vector<double> qr(kSamples), euler(kSamples);
  std::mt19937_64 eng(5150);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int s = 0; s < kSamples; ++s) {
    qr[s] = std::norm(haar_random_unitary(1, {314, static_cast<std::uint64_t>(s)})(0, 0));
    const double a = 2 * std::numbers::pi * unit(eng);
    const double b = std::acos(1.0 - 2.0 * unit(eng));
    const double c = 2 * std::numbers::pi * unit(eng);
    const Eigen::Matrix2cd u = testing::rz(a) * testing::ry(b) * testing::rz(c);
    euler[s] = std::norm(u(0, 0));
  }
  CHECK(ks_uniform(qr) < 0.03);
  CHECK(ks_uniform(euler) < 0.03);
  CHECK(ks_two_sample(qr, euler) < 0.03);
}

TEST_CASE("state and unitary validation") {
  Vector v(4);
  v << 1, 1, 0, 0;
  CHECK_THROWS_AS(StateVector::from_amplitudes(v), std::invalid_argument);
  const auto s = StateVector::normalized(v);
  CHECK(std::abs(s[0] - C(1 / std::sqrt(2.0))) < 1e-15);
  Vector odd(3);
  odd << 1, 0, 0;
  CHECK_THROWS(StateVector::from_amplitudes(odd));
  Matrix m = Matrix::Identity(2, 2);
  m(0, 1) = 0.1;
  CHECK_THROWS_AS(UnitaryMatrix::from_matrix(m), std::invalid_argument);
  CHECK(StateVector::basis(3, 5)[5] == C(1));
  CHECK_THROWS(StateVector::basis(2, 4));
}

TEST_CASE("apply_gate examples") {
  const auto psi = haar_random_state(3, {11, 0});
  const int q1[] = {1};
  CHECK(max_abs_diff(apply_gate(psi, UnitaryMatrix::identity(1), q1).amplitudes(),
                     psi.amplitudes()) == 0.0);

  const int q0[] = {0};
  const auto flipped = apply_gate(StateVector::basis(2, 0), one_qubit(testing::pauli_x()), q0);
  CHECK(max_abs_diff(flipped.amplitudes(), StateVector::basis(2, 2).amplitudes()) == 0.0);

  // Explicit matrix-vector product for CNOT(0 -> 1).
  Vector in(4);
  in << 1, 0, 1, 0;
  in /= std::sqrt(2.0);
  const Vector expected = cnot_matrix() * in;
  CHECK(std::abs(expected[3] - C(1 / std::sqrt(2.0))) < 1e-15);
  const int pair[] = {0, 1};
  const auto out = apply_gate(StateVector::from_amplitudes(in),
                              UnitaryMatrix::from_matrix(Matrix(cnot_matrix())), pair);
  CHECK(max_abs_diff(out.amplitudes(), expected) < 1e-15);
}

TEST_CASE("apply_gate rejects bad placements") {
  const auto psi = StateVector::basis(3, 0);
  const auto x = one_qubit(testing::pauli_x());
  const auto cx = UnitaryMatrix::from_matrix(Matrix(cnot_matrix()));
  const int out_of_range[] = {3};
  const int negative[] = {-1};
  const int duplicate[] = {1, 1};
  const int too_many[] = {0, 1};
  CHECK_THROWS_AS(apply_gate(psi, x, out_of_range), std::out_of_range);
  CHECK_THROWS_AS(apply_gate(psi, x, negative), std::out_of_range);
  CHECK_THROWS_AS(apply_gate(psi, cx, duplicate), std::invalid_argument);
  CHECK_THROWS_AS(apply_gate(psi, x, too_many), std::invalid_argument);
}

TEST_CASE("strided kernels agree with explicit embedding") {
  for (int n = 2; n <= 4; ++n) {
    const auto psi = haar_random_state(n, {21, static_cast<std::uint64_t>(n)});
    for (int a = 0; a < n; ++a) {
      const auto g1 = haar_random_unitary(1, {22, static_cast<std::uint64_t>(a)});
      const int one[] = {a};
      const Vector ref1 = testing::embed_1q(g1.matrix(), a, n) * psi.amplitudes();
      CHECK(max_abs_diff(apply_gate(psi, g1, one).amplitudes(), ref1) < 1e-12);
      for (int b = 0; b < n; ++b) {
        if (a == b) continue;
        const auto g2 = haar_random_unitary(2, {23, static_cast<std::uint64_t>(4 * a + b)});
        const int two[] = {a, b};
        const Vector ref2 =
            testing::embed_2q(g2.matrix(), a, b, n) * psi.amplitudes();
        CHECK(max_abs_diff(apply_gate(psi, g2, two).amplitudes(), ref2) < 1e-12);
      }
    }
  }
}

TEST_CASE("norm drift over many gate applications") {
  constexpr int n = 5;
  auto psi = haar_random_state(n, {31, 0});
  std::mt19937_64 eng(31);
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int k = 0; k < 1000; ++k) {
    const auto g = haar_random_unitary(2, {32, static_cast<std::uint64_t>(k)});
    const int a = pick(eng);
    int b = pick(eng);
    while (b == a) b = pick(eng);
    const int pair[] = {a, b};
    psi = apply_gate(psi, g, pair);
  }
  CHECK(std::abs(psi.norm() - 1.0) < 1e-10);
}

TEST_CASE("compose, dagger, trace and kron") {
  const auto u = haar_random_unitary(3, {41, 0});
  const auto v = haar_random_unitary(3, {41, 1});
  CHECK(max_abs_diff(compose(u, dagger(u)).matrix(), Matrix::Identity(8, 8)) < 1e-12);
  CHECK(std::abs(trace(UnitaryMatrix::identity(3)) - C(8)) < 1e-15);
  const auto psi = haar_random_state(3, {41, 2});
  CHECK(max_abs_diff(apply(compose(u, v), psi).amplitudes(),
                     apply(u, apply(v, psi)).amplitudes()) < 1e-12);
  CHECK_THROWS(compose(u, UnitaryMatrix::identity(2)));
  CHECK_THROWS(apply(u, StateVector::basis(2, 0)));

  const auto xi = kron(one_qubit(testing::pauli_x()), UnitaryMatrix::identity(1));
  const Matrix direct = testing::kron_ref(testing::pauli_x(), Matrix::Identity(2, 2));
  CHECK(max_abs_diff(xi.matrix(), direct) == 0.0);
  CHECK(max_abs_diff(apply(xi, StateVector::basis(2, 0)).amplitudes(),
                     StateVector::basis(2, 2).amplitudes()) == 0.0);
}

}  // TEST_SUITE
