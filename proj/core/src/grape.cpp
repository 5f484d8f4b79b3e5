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

#include "qcsearch/grape.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qcsearch/detail/sequence.hpp"
#include "qcsearch/kernels.hpp"

namespace qcsearch {
namespace {

using detail::GateOp;

// d/dz1, d/dy, d/dz2 of Rz(z2) Ry(y) Rz(z1).
std::array<Eigen::Matrix2cd, 3> euler_derivatives(const double* t) {
  const Eigen::Matrix2cd g = euler_rotation(t[0], t[1], t[2]);
  const Complex mi(0.0, -0.5);
  const Complex pi(0.0, 0.5);
  std::array<Eigen::Matrix2cd, 3> d;
  d[0] << g(0, 0) * mi, g(0, 1) * pi, g(1, 0) * mi, g(1, 1) * pi;
  const double c = 0.5 * std::cos(0.5 * t[1]);
  const double s = 0.5 * std::sin(0.5 * t[1]);
  const Complex sum = std::polar(1.0, -0.5 * (t[0] + t[2]));
  const Complex diff = std::polar(1.0, -0.5 * (t[2] - t[0]));
  d[1] << -sum * s, -diff * c, std::conj(diff) * c, -std::conj(sum) * s;
  d[2] << g(0, 0) * mi, g(0, 1) * mi, g(1, 0) * pi, g(1, 1) * pi;
  return d;
}

// Forward/backward propagation for one (configuration, target) pair.
//
// With U = G_M ... G_1 the overlap is tau = Tr(B_M U) / norm, where B_M is
// U_goal^dag (or <goal| for states). `prefix_` holds P_j = G_j ... G_1 applied
// to the initial buffer and `costate_` holds B_j^T with B_{j-1} = B_j G_j, both
// column-major with the Hilbert index in the low bits, so that
// tau * norm = sum_k costate[k] * prefix[k] for every j.
class FidelityEngine {
 public:
  FidelityEngine(const GateConfiguration& config, const Target& target)
      : n_(config.num_qubits()),
        ops_(detail::build_sequence(config)),
        entangler_(entangler_matrix(config.kind())),
        entangler_adj_(entangler_.adjoint()),
        entangler_t_(entangler_.transpose()) {
    if (target.num_qubits() != n_) {
      throw std::invalid_argument("target has " +
                                  std::to_string(target.num_qubits()) +
                                  " qubits, configuration has " +
                                  std::to_string(n_));
    }
    const std::size_t d = dimension(n_);
    if (target.task() == TaskKind::StatePrep) {
      norm_ = 1.0;
      initial_.assign(d, Complex{});
      initial_[0] = 1.0;
      goal_conj_.resize(d);
      for (std::size_t i = 0; i < d; ++i) goal_conj_[i] = std::conj(target.state()[i]);
    } else {
      norm_ = static_cast<double>(d);
      initial_.assign(d * d, Complex{});
      for (std::size_t i = 0; i < d; ++i) initial_[i * d + i] = 1.0;
      const Matrix& u = target.unitary().matrix();
      goal_conj_.resize(d * d);
      for (std::size_t c = 0; c < d; ++c) {
        for (std::size_t r = 0; r < d; ++r) {
          goal_conj_[c * d + r] = std::conj(u(static_cast<Eigen::Index>(r),
                                              static_cast<Eigen::Index>(c)));
        }
      }
    }
    prefix_.resize(initial_.size());
    costate_.resize(initial_.size());
  }

  double evaluate(std::span<const double> angles) {
    prefix_ = initial_;
    detail::evolve(prefix_, ops_, entangler_, angles);
    overlap_ = kernels::bilinear(goal_conj_, prefix_) / norm_;
    return std::norm(overlap_);
  }

  // Requires the preceding evaluate() call to have used the same angles.
  void gradient(std::span<const double> angles, std::span<double> grad) {
    costate_ = goal_conj_;
    const Complex weight = 2.0 * std::conj(overlap_) / norm_;
    for (auto it = ops_.rbegin(); it != ops_.rend(); ++it) {
      const GateOp& op = *it;
      switch (op.type) {
        case GateOp::Type::Rotation: {
          const double* t = angles.data() + op.param_offset;
          const Eigen::Matrix2cd g = euler_rotation(t[0], t[1], t[2]);
          kernels::apply_1q(prefix_, op.bit_a, g.adjoint());
          const Eigen::Matrix2cd env =
              kernels::environment_1q(costate_, prefix_, op.bit_a);
          const auto dg = euler_derivatives(t);
          for (int k = 0; k < 3; ++k) {
            const Complex dtau = dg[static_cast<std::size_t>(k)].cwiseProduct(env).sum();
            grad[op.param_offset + static_cast<std::size_t>(k)] = (weight * dtau).real();
          }
          kernels::apply_1q(costate_, op.bit_a, g.transpose());
          break;
        }
        case GateOp::Type::Cnot:
          kernels::apply_cnot(prefix_, op.bit_a, op.bit_b);
          kernels::apply_cnot(costate_, op.bit_a, op.bit_b);
          break;
        case GateOp::Type::Entangler4:
          kernels::apply_2q(prefix_, op.bit_a, op.bit_b, entangler_adj_);
          kernels::apply_2q(costate_, op.bit_a, op.bit_b, entangler_t_);
          break;
      }
    }
  }

 private:
  int n_;
  std::vector<GateOp> ops_;
  Eigen::Matrix4cd entangler_, entangler_adj_, entangler_t_;
  double norm_ = 1.0;
  std::vector<Complex> initial_, goal_conj_, prefix_, costate_;
  Complex overlap_{};
};

double l2_norm(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

OptimizationResult ascend(FidelityEngine& engine,
                          const OptimizerSettings& settings,
                          std::vector<double> angles) {
  const std::size_t count = angles.size();
  std::vector<double> grad(count, 0.0), trial(count);
  double fid = engine.evaluate(angles);
  engine.gradient(angles, grad);
  double step = settings.initial_step;
  double checkpoint = fid;
  std::size_t since_checkpoint = 0;
  std::size_t iter = 0;
  Termination why = Termination::MaxIterations;

  while (true) {
    if (fid > settings.success_stop) {
      why = Termination::SuccessStop;
      break;
    }
    if (iter >= settings.max_iterations) break;
    const double gnorm = l2_norm(grad);
    if (!(gnorm > 0.0)) {
      why = Termination::Stalled;
      break;
    }
    ++iter;
    const double scale = step / gnorm;
    for (std::size_t k = 0; k < count; ++k) trial[k] = angles[k] + scale * grad[k];
    const double f_trial = engine.evaluate(trial);
    if (f_trial > fid) {
      angles.swap(trial);
      fid = f_trial;
      engine.gradient(angles, grad);
      step = std::min(step * 1.2, settings.max_step);
    } else {
      step = std::max(step * 0.5, settings.min_step);
    }
    if (++since_checkpoint >= settings.stall_window) {
      if (fid - checkpoint < settings.stall_delta) {
        why = Termination::Stalled;
        break;
      }
      checkpoint = fid;
      since_checkpoint = 0;
    }
  }

  OptimizationResult result;
  result.fidelity = fid;
  result.params = RotationParams{std::move(angles)};
  result.iterations = iter;
  result.termination = why;
  result.perfect = 1.0 - fid < settings.perfect_threshold;
  result.near_miss = result.perfect && 1.0 - fid >= kNearMissFloor;
  result.restarts_run = 1;
  return result;
}

}  // namespace

int Target::num_qubits() const {
  return std::visit([](const auto& g) { return g.num_qubits(); }, goal_);
}

Target haar_target(TaskKind task, int n, const RngSeed& rng) {
  return task == TaskKind::StatePrep ? Target::state_prep(haar_random_state(n, rng))
                                     : Target::unitary(haar_random_unitary(n, rng));
}

void OptimizerSettings::validate() const {
  const auto fail = [](const std::string& what) {
    throw std::invalid_argument("optimizer settings: " + what);
  };
  if (max_iterations == 0) fail("max_iterations must be positive");
  if (!(success_stop > 0.0 && success_stop < 1.0)) fail("success_stop must be in (0, 1)");
  if (stall_window == 0) fail("stall_window must be positive");
  if (!(stall_delta > 0.0)) fail("stall_delta must be positive");
  if (!(perfect_threshold > 0.0 && perfect_threshold < 1.0)) {
    fail("perfect_threshold must be in (0, 1)");
  }
  if (restarts == 0) fail("restarts must be positive");
  if (!(min_step > 0.0 && min_step <= initial_step && initial_step <= max_step)) {
    fail("steps must satisfy 0 < min_step <= initial_step <= max_step");
  }
}

std::string_view to_string(Termination t) {
  switch (t) {
    case Termination::SuccessStop:
      return "success_stop";
    case Termination::Stalled:
      return "stalled";
    case Termination::MaxIterations:
      return "max_iterations";
  }
  return "?";
}

double fidelity(const ParameterizedCircuit& circuit, const Target& target) {
  FidelityEngine engine(circuit.config(), target);
  return engine.evaluate(circuit.params().angles);
}

std::vector<double> fidelity_gradient(const ParameterizedCircuit& circuit,
                                      const Target& target) {
  FidelityEngine engine(circuit.config(), target);
  const auto& angles = circuit.params().angles;
  std::vector<double> grad(angles.size(), 0.0);
  engine.evaluate(angles);
  engine.gradient(angles, grad);
  return grad;
}

OptimizationResult optimize_from(const GateConfiguration& config,
                                 const Target& target,
                                 const OptimizerSettings& settings,
                                 RotationParams initial) {
  settings.validate();
  // Validates the angle count.
  ParameterizedCircuit circuit(config, initial);
  FidelityEngine engine(config, target);
  return ascend(engine, settings, std::move(initial.angles));
}

OptimizationResult optimize(const GateConfiguration& config,
                            const Target& target,
                            const OptimizerSettings& settings,
                            const RngSeed& rng) {
  settings.validate();
  FidelityEngine engine(config, target);
  const std::size_t count = param_count(config.num_qubits(), config.size());
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);

  OptimizationResult best;
  best.fidelity = -1.0;
  std::size_t runs = 0;
  for (std::size_t r = 0; r < settings.restarts; ++r) {
    Engine gen = make_engine(rng.child(r));
    std::vector<double> init(count);
    for (double& a : init) a = angle(gen);
    OptimizationResult run = ascend(engine, settings, std::move(init));
    ++runs;
    if (run.fidelity > best.fidelity) best = std::move(run);
    if (best.perfect) break;
  }
  best.restarts_run = runs;
  return best;
}

}  // namespace qcsearch
