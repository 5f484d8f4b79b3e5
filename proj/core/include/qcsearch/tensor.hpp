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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace qcsearch {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr int kMaxQubits = 8;

// Tolerances used when validating user-supplied states and unitaries.
inline constexpr double kNormTolerance = 1e-12;
inline constexpr double kUnitaryTolerance = 1e-12;

/// Throws std::domain_error unless 1 <= n <= kMaxQubits.
void check_qubit_count(int n);

/// Hilbert-space dimension 2^n.
constexpr std::size_t dimension(int n) { return std::size_t{1} << n; }

/// Normalized pure state of n qubits. Qubit 0 is the most significant bit of
/// the basis index, so |10> (qubit 0 set) has index 2 for n = 2.
class StateVector {
 public:
  /// Validates length 2^n and unit norm within `tol`.
  static StateVector from_amplitudes(Vector amplitudes,
                                     double tol = kNormTolerance);
  /// Rescales a nonzero vector to unit norm.
  static StateVector normalized(Vector amplitudes);
  static StateVector basis(int n, std::size_t index);

  int num_qubits() const { return n_; }
  std::size_t dim() const { return static_cast<std::size_t>(amps_.size()); }
  const Vector& amplitudes() const { return amps_; }
  Complex operator[](std::size_t i) const { return amps_[static_cast<Eigen::Index>(i)]; }
  double norm() const { return amps_.norm(); }

 private:
  StateVector(int n, Vector amps) : n_(n), amps_(std::move(amps)) {}
  int n_;
  Vector amps_;
};

/// Unitary operator on n qubits, same basis ordering as StateVector.
class UnitaryMatrix {
 public:
  /// Validates a square 2^n matrix with max|U^dag U - I| < tol.
  static UnitaryMatrix from_matrix(Matrix m, double tol = kUnitaryTolerance);
  static UnitaryMatrix identity(int n);

  int num_qubits() const { return n_; }
  std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }
  const Matrix& matrix() const { return m_; }
  Complex operator()(std::size_t r, std::size_t c) const {
    return m_(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
  }

  /// max_ij |(U^dag U - I)_ij|
  double unitarity_error() const;

 private:
  UnitaryMatrix(int n, Matrix m) : n_(n), m_(std::move(m)) {}
  int n_;
  Matrix m_;
};

/// Applies `right` first, then `left`.
UnitaryMatrix compose(const UnitaryMatrix& left, const UnitaryMatrix& right);
UnitaryMatrix dagger(const UnitaryMatrix& u);
Complex trace(const UnitaryMatrix& u);
/// Tensor product; `a` acts on the leading (more significant) qubits.
UnitaryMatrix kron(const UnitaryMatrix& a, const UnitaryMatrix& b);

/// Dense matrix-vector product.
StateVector apply(const UnitaryMatrix& u, const StateVector& state);

/// Applies a 1- or 2-qubit gate on `placement` (qubit indices, gate-local
/// order: placement[0] is the gate's most significant qubit) using the
/// strided kernels. Throws std::invalid_argument on bad placements.
StateVector apply_gate(const StateVector& state, const UnitaryMatrix& gate,
                       std::span<const int> placement);

/// Max-abs entrywise distance between two matrices of equal shape.
double max_abs_diff(const Matrix& a, const Matrix& b);
double max_abs_diff(const Vector& a, const Vector& b);

}  // namespace qcsearch
