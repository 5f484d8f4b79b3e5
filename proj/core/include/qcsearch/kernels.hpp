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

#pragma once

// Strided in-place gate kernels over amplitude buffers.
//
// A buffer holds 2^k complex amplitudes and a gate acts on one or two bit
// positions of the buffer index. A state of n qubits uses bit n-1-q for qubit
// q. A column-major d x d operator is the same thing with n extra high bits
// (the column index), so the kernels evolve a whole unitary in one call.

#include <complex>
#include <cstddef>
#include <span>

#include <Eigen/Dense>

namespace qcsearch::kernels {

using Complex = std::complex<double>;

/// buf <- (g on `bit`) buf
void apply_1q(std::span<Complex> buf, unsigned bit, const Eigen::Matrix2cd& g);

/// buf <- (g on bits (hi, lo)) buf; g's local basis is |b_hi b_lo>.
void apply_2q(std::span<Complex> buf, unsigned bit_hi, unsigned bit_lo,
              const Eigen::Matrix4cd& g);

/// Controlled-NOT permutation.
void apply_cnot(std::span<Complex> buf, unsigned control_bit,
                unsigned target_bit);

/// Single-qubit environment E_ab = sum_k left[k|bit=a] * right[k|bit=b] where
/// both buffers share every index bit except `bit`. For a trace-like overlap
/// sum_k left[k] * (G right)[k] with G = g on `bit`, the overlap equals
/// sum_ab g_ab E_ab.
Eigen::Matrix2cd environment_1q(std::span<const Complex> left,
                                std::span<const Complex> right, unsigned bit);

/// sum_k left[k] * right[k] (no conjugation).
Complex bilinear(std::span<const Complex> left, std::span<const Complex> right);

}  // namespace qcsearch::kernels
