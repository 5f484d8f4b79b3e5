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

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qcsearch/tensor.hpp"

namespace qcsearch {

/// Fixed two-qubit entangler placed between rotation layers.
enum class GateKind { CNOT, B };

std::string_view to_string(GateKind kind);
/// Accepts "cnot" or "b" (case-insensitive).
GateKind parse_gate_kind(std::string_view text);

/// 4x4 matrix of the entangler in the basis |00>,|01>,|10>,|11> where the
/// first (more significant) qubit is the lower-indexed one of the placement.
/// For CNOT that qubit is the control.
Eigen::Matrix4cd entangler_matrix(GateKind kind);

/// Unordered qubit pair stored with first < second.
struct EntanglerPlacement {
  int first = 0;
  int second = 1;

  /// Canonicalizes (i, j) to (min, max); throws if i == j or either < 0.
  static EntanglerPlacement of(int i, int j);

  friend bool operator==(const EntanglerPlacement&,
                         const EntanglerPlacement&) = default;
  friend auto operator<=>(const EntanglerPlacement&,
                          const EntanglerPlacement&) = default;
};

/// Ordered entangler positions for an n-qubit circuit.
class GateConfiguration {
 public:
  GateConfiguration(int n, GateKind kind,
                    std::vector<EntanglerPlacement> placements = {});

  int num_qubits() const { return n_; }
  GateKind kind() const { return kind_; }
  const std::vector<EntanglerPlacement>& placements() const {
    return placements_;
  }
  std::size_t size() const { return placements_.size(); }

  friend bool operator==(const GateConfiguration&,
                         const GateConfiguration&) = default;

 private:
  int n_;
  GateKind kind_;
  std::vector<EntanglerPlacement> placements_;
};

/// All unordered pairs (i < j) of n qubits in lexicographic order.
std::vector<EntanglerPlacement> all_pairs(int n);

// Rotation-angle layout: an initial (z1, y, z2) triple per qubit, then for
// entangler e one triple on its first qubit followed by one on its second.
// Each triple implements Rz(z2) Ry(y) Rz(z1).
constexpr std::size_t param_count(int n, std::size_t entanglers) {
  return 3 * (static_cast<std::size_t>(n) + 2 * entanglers);
}
constexpr std::size_t initial_triple_offset(int qubit) {
  return 3 * static_cast<std::size_t>(qubit);
}
constexpr std::size_t entangler_triple_offset(int n, std::size_t entangler,
                                              int side) {
  return 3 * (static_cast<std::size_t>(n) + 2 * entangler +
              static_cast<std::size_t>(side));
}

/// Rz(z2) * Ry(y) * Rz(z1) with Rz(t) = diag(e^{-it/2}, e^{it/2}).
Eigen::Matrix2cd euler_rotation(double z1, double y, double z2);

/// Rotation angles (radians) of a parameterized circuit.
struct RotationParams {
  std::vector<double> angles;

  std::size_t size() const { return angles.size(); }
  friend bool operator==(const RotationParams&, const RotationParams&) = default;
};

class ParameterizedCircuit {
 public:
  /// Throws std::invalid_argument if the angle count does not match the
  /// configuration or any angle is non-finite.
  ParameterizedCircuit(GateConfiguration config, RotationParams params);

  /// All angles zero.
  static ParameterizedCircuit zeros(GateConfiguration config);

  const GateConfiguration& config() const { return config_; }
  const RotationParams& params() const { return params_; }
  int num_qubits() const { return config_.num_qubits(); }

 private:
  GateConfiguration config_;
  RotationParams params_;
};

/// Full operator of the circuit.
UnitaryMatrix circuit_unitary(const ParameterizedCircuit& circuit);

/// Gate-by-gate evolution of `input` without forming the full matrix.
StateVector circuit_apply(const ParameterizedCircuit& circuit,
                          const StateVector& input);

/// n-qubit Toffoli: identity except the last two basis states swapped.
UnitaryMatrix toffoli_target(int n);

/// The 15-CNOT configuration found for the 4-qubit Toffoli gate, written with
/// 0-based qubit indices.
GateConfiguration toffoli4_cnot15_config();

}  // namespace qcsearch
