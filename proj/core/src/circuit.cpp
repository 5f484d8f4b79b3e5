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

#include "qcsearch/circuit.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>
#include <string>

#include "qcsearch/detail/sequence.hpp"

namespace qcsearch {

std::string_view to_string(GateKind kind) {
  switch (kind) {
    case GateKind::CNOT:
      return "cnot";
    case GateKind::B:
      return "b";
  }
  return "?";
}

GateKind parse_gate_kind(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (lower == "cnot") return GateKind::CNOT;
  if (lower == "b") return GateKind::B;
  throw std::invalid_argument("unknown gate kind '" + std::string(text) + "'");
}

Eigen::Matrix4cd entangler_matrix(GateKind kind) {
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  if (kind == GateKind::CNOT) {
    m(0, 0) = 1.0;
    m(1, 1) = 1.0;
    m(2, 3) = 1.0;
    m(3, 2) = 1.0;
    return m;
  }
  const double h = 1.0 / std::sqrt(2.0);
  const Complex ih(0.0, h);
  m(0, 0) = 1.0;
  m(1, 1) = h;
  m(1, 2) = ih;
  m(2, 3) = 1.0;
  m(3, 1) = ih;
  m(3, 2) = h;
  return m;
}

EntanglerPlacement EntanglerPlacement::of(int i, int j) {
  if (i < 0 || j < 0) {
    throw std::invalid_argument("negative qubit index in placement");
  }
  if (i == j) {
    throw std::invalid_argument("placement qubits must be distinct");
  }
  return EntanglerPlacement{std::min(i, j), std::max(i, j)};
}

GateConfiguration::GateConfiguration(int n, GateKind kind,
                                     std::vector<EntanglerPlacement> placements)
    : n_(n), kind_(kind), placements_(std::move(placements)) {
  check_qubit_count(n);
  for (const auto& p : placements_) {
    if (p.first < 0 || p.first >= p.second || p.second >= n) {
      throw std::invalid_argument(
          "invalid placement (" + std::to_string(p.first) + ", " +
          std::to_string(p.second) + ") for " + std::to_string(n) + " qubits");
    }
  }
}

std::vector<EntanglerPlacement> all_pairs(int n) {
  std::vector<EntanglerPlacement> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});
  }
  return pairs;
}

Eigen::Matrix2cd euler_rotation(double z1, double y, double z2) {
  const double c = std::cos(0.5 * y);
  const double s = std::sin(0.5 * y);
  const Complex sum = std::polar(1.0, -0.5 * (z1 + z2));
  const Complex diff = std::polar(1.0, -0.5 * (z2 - z1));
  Eigen::Matrix2cd g;
  g << sum * c, -diff * s, std::conj(diff) * s, std::conj(sum) * c;
  return g;
}

ParameterizedCircuit::ParameterizedCircuit(GateConfiguration config,
                                           RotationParams params)
    : config_(std::move(config)), params_(std::move(params)) {
  const std::size_t expected = param_count(config_.num_qubits(), config_.size());
  if (params_.size() != expected) {
    throw std::invalid_argument("expected " + std::to_string(expected) +
                                " angles, got " +
                                std::to_string(params_.size()));
  }
  for (double a : params_.angles) {
    if (!std::isfinite(a)) {
      throw std::invalid_argument("rotation angle is not finite");
    }
  }
}

ParameterizedCircuit ParameterizedCircuit::zeros(GateConfiguration config) {
  const std::size_t count = param_count(config.num_qubits(), config.size());
  return ParameterizedCircuit(std::move(config),
                              RotationParams{std::vector<double>(count, 0.0)});
}

namespace detail {

std::vector<GateOp> build_sequence(const GateConfiguration& config) {
  const int n = config.num_qubits();
  const auto bit = [n](int q) { return static_cast<unsigned>(n - 1 - q); };
  std::vector<GateOp> ops;
  ops.reserve(static_cast<std::size_t>(n) + 3 * config.size());
  for (int q = 0; q < n; ++q) {
    ops.push_back({GateOp::Type::Rotation, bit(q), 0, initial_triple_offset(q)});
  }
  const auto fixed = config.kind() == GateKind::CNOT ? GateOp::Type::Cnot
                                                     : GateOp::Type::Entangler4;
  for (std::size_t e = 0; e < config.size(); ++e) {
    const auto& p = config.placements()[e];
    ops.push_back({fixed, bit(p.first), bit(p.second), 0});
    ops.push_back({GateOp::Type::Rotation, bit(p.first), 0,
                   entangler_triple_offset(n, e, 0)});
    ops.push_back({GateOp::Type::Rotation, bit(p.second), 0,
                   entangler_triple_offset(n, e, 1)});
  }
  return ops;
}

void evolve(std::span<Complex> buf, const std::vector<GateOp>& ops,
            const Eigen::Matrix4cd& entangler, std::span<const double> angles) {
  for (const GateOp& op : ops) {
    switch (op.type) {
      case GateOp::Type::Rotation: {
        const double* t = angles.data() + op.param_offset;
        kernels::apply_1q(buf, op.bit_a, euler_rotation(t[0], t[1], t[2]));
        break;
      }
      case GateOp::Type::Cnot:
        kernels::apply_cnot(buf, op.bit_a, op.bit_b);
        break;
      case GateOp::Type::Entangler4:
        kernels::apply_2q(buf, op.bit_a, op.bit_b, entangler);
        break;
    }
  }
}

}  // namespace detail

UnitaryMatrix circuit_unitary(const ParameterizedCircuit& circuit) {
  const int n = circuit.num_qubits();
  const auto d = static_cast<Eigen::Index>(dimension(n));
  Matrix m = Matrix::Identity(d, d);
  detail::evolve(std::span<Complex>(m.data(), static_cast<std::size_t>(m.size())),
                 detail::build_sequence(circuit.config()),
                 entangler_matrix(circuit.config().kind()),
                 circuit.params().angles);
  return UnitaryMatrix::from_matrix(std::move(m), 1e-9);
}

StateVector circuit_apply(const ParameterizedCircuit& circuit,
                          const StateVector& input) {
  if (input.num_qubits() != circuit.num_qubits()) {
    throw std::invalid_argument("circuit_apply: qubit count mismatch");
  }
  Vector v = input.amplitudes();
  detail::evolve(std::span<Complex>(v.data(), static_cast<std::size_t>(v.size())),
                 detail::build_sequence(circuit.config()),
                 entangler_matrix(circuit.config().kind()),
                 circuit.params().angles);
  return StateVector::from_amplitudes(std::move(v), 1e-9);
}

UnitaryMatrix toffoli_target(int n) {
  if (n < 3) {
    throw std::domain_error("Toffoli target needs at least 3 qubits");
  }
  check_qubit_count(n);
  const auto d = static_cast<Eigen::Index>(dimension(n));
  Matrix m = Matrix::Identity(d, d);
  m(d - 2, d - 2) = 0.0;
  m(d - 1, d - 1) = 0.0;
  m(d - 2, d - 1) = 1.0;
  m(d - 1, d - 2) = 1.0;
  return UnitaryMatrix::from_matrix(std::move(m));
}

GateConfiguration toffoli4_cnot15_config() {
  // 1-based labels, top wire = qubit 1, left to right.
  static constexpr int kPairs[15][2] = {
      {2, 3}, {1, 3}, {3, 4}, {1, 4}, {2, 4}, {2, 3}, {1, 3}, {1, 2},
      {2, 4}, {1, 3}, {2, 3}, {1, 4}, {3, 4}, {1, 4}, {1, 2}};
  std::vector<EntanglerPlacement> placements;
  for (const auto& p : kPairs) {
    placements.push_back(EntanglerPlacement::of(p[0] - 1, p[1] - 1));
  }
  return GateConfiguration(4, GateKind::CNOT, std::move(placements));
}

}  // namespace qcsearch
