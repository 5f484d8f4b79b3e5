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

#include "qcsearch/kernels.hpp"

#include <cassert>

namespace qcsearch::kernels {
namespace {

// Inserts a zero at bit position `bit` of k.
inline std::size_t insert_zero(std::size_t k, unsigned bit) {
  const std::size_t low = k & ((std::size_t{1} << bit) - 1);
  return ((k >> bit) << (bit + 1)) | low;
}

}  // namespace

void apply_1q(std::span<Complex> buf, unsigned bit, const Eigen::Matrix2cd& g) {
  const std::size_t mask = std::size_t{1} << bit;
  const std::size_t size = buf.size();
  assert(mask < size);
  const Complex g00 = g(0, 0), g01 = g(0, 1), g10 = g(1, 0), g11 = g(1, 1);
  Complex* data = buf.data();
  for (std::size_t base = 0; base < size; base += 2 * mask) {
    Complex* lo = data + base;
    Complex* hi = lo + mask;
    for (std::size_t i = 0; i < mask; ++i) {
      const Complex a = lo[i];
      const Complex b = hi[i];
      lo[i] = g00 * a + g01 * b;
      hi[i] = g10 * a + g11 * b;
    }
  }
}

void apply_2q(std::span<Complex> buf, unsigned bit_hi, unsigned bit_lo,
              const Eigen::Matrix4cd& g) {
  assert(bit_hi != bit_lo);
  const std::size_t mh = std::size_t{1} << bit_hi;
  const std::size_t ml = std::size_t{1} << bit_lo;
  const unsigned first = bit_hi < bit_lo ? bit_hi : bit_lo;
  const unsigned second = bit_hi < bit_lo ? bit_lo : bit_hi;
  const std::size_t quarter = buf.size() / 4;
  Complex* data = buf.data();
  for (std::size_t k = 0; k < quarter; ++k) {
    const std::size_t i0 = insert_zero(insert_zero(k, first), second);
    const std::size_t idx[4] = {i0, i0 | ml, i0 | mh, i0 | mh | ml};
    const Complex v[4] = {data[idx[0]], data[idx[1]], data[idx[2]],
                          data[idx[3]]};
    for (int r = 0; r < 4; ++r) {
      data[idx[r]] = g(r, 0) * v[0] + g(r, 1) * v[1] + g(r, 2) * v[2] +
                     g(r, 3) * v[3];
    }
  }
}

void apply_cnot(std::span<Complex> buf, unsigned control_bit,
                unsigned target_bit) {
  assert(control_bit != target_bit);
  const std::size_t mc = std::size_t{1} << control_bit;
  const std::size_t mt = std::size_t{1} << target_bit;
  const unsigned first = control_bit < target_bit ? control_bit : target_bit;
  const unsigned second = control_bit < target_bit ? target_bit : control_bit;
  const std::size_t quarter = buf.size() / 4;
  Complex* data = buf.data();
  for (std::size_t k = 0; k < quarter; ++k) {
    const std::size_t i = insert_zero(insert_zero(k, first), second) | mc;
    std::swap(data[i], data[i | mt]);
  }
}

Eigen::Matrix2cd environment_1q(std::span<const Complex> left,
                                std::span<const Complex> right, unsigned bit) {
  assert(left.size() == right.size());
  const std::size_t mask = std::size_t{1} << bit;
  const std::size_t size = left.size();
  Complex e00{}, e01{}, e10{}, e11{};
  for (std::size_t base = 0; base < size; base += 2 * mask) {
    const Complex* l0 = left.data() + base;
    const Complex* l1 = l0 + mask;
    const Complex* r0 = right.data() + base;
    const Complex* r1 = r0 + mask;
    for (std::size_t i = 0; i < mask; ++i) {
      e00 += l0[i] * r0[i];
      e01 += l0[i] * r1[i];
      e10 += l1[i] * r0[i];
      e11 += l1[i] * r1[i];
    }
  }
  Eigen::Matrix2cd e;
  e << e00, e01, e10, e11;
  return e;
}

Complex bilinear(std::span<const Complex> left, std::span<const Complex> right) {
  assert(left.size() == right.size());
  Complex acc{};
  for (std::size_t i = 0; i < left.size(); ++i) acc += left[i] * right[i];
  return acc;
}

}  // namespace qcsearch::kernels
