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

#include "qcsearch/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "qcsearch/kernels.hpp"

namespace qcsearch {
namespace {

int qubits_for_dim(Eigen::Index dim) {
  if (dim < 2 || (dim & (dim - 1)) != 0) {
    throw std::invalid_argument("dimension " + std::to_string(dim) +
                                " is not a power of two >= 2");
  }
  int n = 0;
  while ((Eigen::Index{1} << n) < dim) ++n;
  check_qubit_count(n);
  return n;
}

}  // namespace

void check_qubit_count(int n) {
  if (n < 1 || n > kMaxQubits) {
    throw std::domain_error("qubit count " + std::to_string(n) +
                            " outside [1, " + std::to_string(kMaxQubits) + "]");
  }
}

StateVector StateVector::from_amplitudes(Vector amplitudes, double tol) {
  const int n = qubits_for_dim(amplitudes.size());
  const double norm = amplitudes.norm();
  if (std::abs(norm * norm - 1.0) > tol) {
    throw std::invalid_argument("state vector is not normalized (|v|^2 = " +
                                std::to_string(norm * norm) + ")");
  }
  return StateVector(n, std::move(amplitudes));
}

StateVector StateVector::normalized(Vector amplitudes) {
  const int n = qubits_for_dim(amplitudes.size());
  const double norm = amplitudes.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw std::invalid_argument("cannot normalize a zero or non-finite vector");
  }
  amplitudes /= norm;
  return StateVector(n, std::move(amplitudes));
}

StateVector StateVector::basis(int n, std::size_t index) {
  check_qubit_count(n);
  if (index >= dimension(n)) {
    throw std::out_of_range("basis index out of range");
  }
  Vector v = Vector::Zero(static_cast<Eigen::Index>(dimension(n)));
  v[static_cast<Eigen::Index>(index)] = 1.0;
  return StateVector(n, std::move(v));
}

UnitaryMatrix UnitaryMatrix::from_matrix(Matrix m, double tol) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("unitary must be square");
  }
  const int n = qubits_for_dim(m.rows());
  UnitaryMatrix u(n, std::move(m));
  const double err = u.unitarity_error();
  if (!(err < tol)) {
    throw std::invalid_argument("matrix is not unitary (error " +
                                std::to_string(err) + ")");
  }
  return u;
}

UnitaryMatrix UnitaryMatrix::identity(int n) {
  check_qubit_count(n);
  const auto d = static_cast<Eigen::Index>(dimension(n));
  return UnitaryMatrix(n, Matrix::Identity(d, d));
}

double UnitaryMatrix::unitarity_error() const {
  const Matrix gram = m_.adjoint() * m_;
  return (gram - Matrix::Identity(m_.rows(), m_.cols())).cwiseAbs().maxCoeff();
}

UnitaryMatrix compose(const UnitaryMatrix& left, const UnitaryMatrix& right) {
  if (left.dim() != right.dim()) {
    throw std::invalid_argument("compose: dimension mismatch");
  }
  return UnitaryMatrix::from_matrix(left.matrix() * right.matrix(), 1e-9);
}

UnitaryMatrix dagger(const UnitaryMatrix& u) {
  return UnitaryMatrix::from_matrix(u.matrix().adjoint(), 1e-9);
}

Complex trace(const UnitaryMatrix& u) { return u.matrix().trace(); }

UnitaryMatrix kron(const UnitaryMatrix& a, const UnitaryMatrix& b) {
  if (a.num_qubits() + b.num_qubits() > kMaxQubits) {
    throw std::domain_error("kron: result exceeds the qubit limit");
  }
  const Matrix& ma = a.matrix();
  const Matrix& mb = b.matrix();
  Matrix out(ma.rows() * mb.rows(), ma.cols() * mb.cols());
  for (Eigen::Index i = 0; i < ma.rows(); ++i) {
    for (Eigen::Index j = 0; j < ma.cols(); ++j) {
      out.block(i * mb.rows(), j * mb.cols(), mb.rows(), mb.cols()) =
          ma(i, j) * mb;
    }
  }
  return UnitaryMatrix::from_matrix(std::move(out), 1e-9);
}

StateVector apply(const UnitaryMatrix& u, const StateVector& state) {
  if (u.dim() != state.dim()) {
    throw std::invalid_argument("apply: dimension mismatch");
  }
  return StateVector::from_amplitudes(u.matrix() * state.amplitudes(), 1e-9);
}

StateVector apply_gate(const StateVector& state, const UnitaryMatrix& gate,
                       std::span<const int> placement) {
  const int n = state.num_qubits();
  const int k = gate.num_qubits();
  if (k != 1 && k != 2) {
    throw std::invalid_argument("apply_gate: only 1- and 2-qubit gates");
  }
  if (static_cast<int>(placement.size()) != k) {
    throw std::invalid_argument("apply_gate: placement size != gate arity");
  }
  for (int q : placement) {
    if (q < 0 || q >= n) {
      throw std::out_of_range("apply_gate: qubit index " + std::to_string(q) +
                              " out of range");
    }
  }
  if (k == 2 && placement[0] == placement[1]) {
    throw std::invalid_argument("apply_gate: duplicate qubit indices");
  }
  Vector amps = state.amplitudes();
  std::span<Complex> buf(amps.data(), static_cast<std::size_t>(amps.size()));
  const auto bit = [n](int q) { return static_cast<unsigned>(n - 1 - q); };
  if (k == 1) {
    kernels::apply_1q(buf, bit(placement[0]), gate.matrix());
  } else {
    kernels::apply_2q(buf, bit(placement[0]), bit(placement[1]),
                      gate.matrix());
  }
  return StateVector::from_amplitudes(std::move(amps), 1e-9);
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("max_abs_diff: shape mismatch");
  }
  return (a - b).cwiseAbs().maxCoeff();
}

double max_abs_diff(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("max_abs_diff: shape mismatch");
  }
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace qcsearch
