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

// Flattened gate sequence shared by circuit evaluation and the optimizer.

#include <cstddef>
#include <span>
#include <vector>

#include "qcsearch/circuit.hpp"
#include "qcsearch/kernels.hpp"

namespace qcsearch::detail {

struct GateOp {
  enum class Type { Rotation, Cnot, Entangler4 };
  Type type = Type::Rotation;
  unsigned bit_a = 0;  // rotation bit, CNOT control, or 4x4 high bit
  unsigned bit_b = 0;  // CNOT target or 4x4 low bit
  std::size_t param_offset = 0;  // Rotation only
};

/// Gate order: initial rotation layer, then per entangler the fixed gate
/// followed by the rotations on its first and second qubit.
std::vector<GateOp> build_sequence(const GateConfiguration& config);

/// Applies the whole sequence to `buf` (a state or column-major operator).
void evolve(std::span<Complex> buf, const std::vector<GateOp>& ops,
            const Eigen::Matrix4cd& entangler, std::span<const double> angles);

}  // namespace qcsearch::detail
