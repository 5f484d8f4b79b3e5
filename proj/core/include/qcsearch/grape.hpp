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
#include <string_view>
#include <variant>
#include <vector>

#include "qcsearch/bounds.hpp"
#include "qcsearch/circuit.hpp"
#include "qcsearch/random.hpp"
#include "qcsearch/tensor.hpp"

namespace qcsearch {

/// What the circuit should implement: a state reached from |0...0> or a full
/// unitary operator.
class Target {
 public:
  static Target state_prep(StateVector goal) { return Target(std::move(goal)); }
  static Target unitary(UnitaryMatrix goal) { return Target(std::move(goal)); }

  TaskKind task() const {
    return std::holds_alternative<StateVector>(goal_) ? TaskKind::StatePrep
                                                      : TaskKind::UnitarySynthesis;
  }
  int num_qubits() const;
  const StateVector& state() const { return std::get<StateVector>(goal_); }
  const UnitaryMatrix& unitary() const { return std::get<UnitaryMatrix>(goal_); }

 private:
  explicit Target(std::variant<StateVector, UnitaryMatrix> goal)
      : goal_(std::move(goal)) {}
  std::variant<StateVector, UnitaryMatrix> goal_;
};

/// Haar-random target of the given task.
Target haar_target(TaskKind task, int n, const RngSeed& rng);

struct OptimizerSettings {
  std::size_t max_iterations = 100000;
  double success_stop = 1.0 - 1e-12;
  std::size_t stall_window = 1000;
  double stall_delta = 1e-12;
  double perfect_threshold = 1e-8;  // on 1 - F
  std::size_t restarts = 1;
  double initial_step = 0.1;  // radians
  double min_step = 1e-9;
  double max_step = 1.0;

  /// Throws std::invalid_argument when a field is out of range.
  void validate() const;
};

enum class Termination { SuccessStop, Stalled, MaxIterations };
std::string_view to_string(Termination t);

struct OptimizationResult {
  double fidelity = 0.0;
  RotationParams params;
  std::size_t iterations = 0;  // of the returned run
  Termination termination = Termination::MaxIterations;
  bool perfect = false;    // 1 - F < perfect_threshold
  bool near_miss = false;  // perfect, but 1 - F >= 1e-12
  std::size_t restarts_run = 0;
};

/// Lower edge of the near-miss band on 1 - F.
inline constexpr double kNearMissFloor = 1e-12;

/// |<goal|U|0...0>|^2 for state preparation, |Tr(U_goal^dag U) / 2^n|^2 for
/// unitary synthesis.
double fidelity(const ParameterizedCircuit& circuit, const Target& target);

/// Exact dF/d(angle) for every rotation angle, same layout as RotationParams.
std::vector<double> fidelity_gradient(const ParameterizedCircuit& circuit,
                                      const Target& target);

/// Gradient ascent on the rotation angles of a fixed configuration.
///
/// Each restart draws angles uniformly in [0, 2pi) from rng.child(restart) and
/// climbs along the normalized gradient. The step grows by 1.2 after every
/// improving step and halves (the trial point being discarded) otherwise,
/// clamped to [min_step, max_step]. A run ends when F > success_stop, when F
/// gained less than stall_delta over the last stall_window iterations, or at
/// max_iterations. Restarts stop early once a run is perfect; the best run is
/// returned.
OptimizationResult optimize(const GateConfiguration& config,
                            const Target& target,
                            const OptimizerSettings& settings,
                            const RngSeed& rng);

/// Single gradient-ascent run from explicit starting angles.
OptimizationResult optimize_from(const GateConfiguration& config,
                                 const Target& target,
                                 const OptimizerSettings& settings,
                                 RotationParams initial);

}  // namespace qcsearch
