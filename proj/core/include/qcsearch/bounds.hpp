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

#include <cstdint>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "qcsearch/circuit.hpp"

namespace qcsearch {

enum class TaskKind { StatePrep, UnitarySynthesis };

std::string_view to_string(TaskKind task);
/// Accepts "sp"/"state" and "u"/"unitary" (case-insensitive).
TaskKind parse_task_kind(std::string_view text);

using BigInt = boost::multiprecision::cpp_int;

/// Parameter-counting lower bound on the number of entanglers needed to
/// reach an arbitrary target. Each entangler contributes two single-qubit
/// rotations worth 2 free parameters (CNOT, which commutes with z rotations
/// on its control) or 3 (B). Throws std::domain_error unless 2 <= n <= 30.
std::uint64_t lower_bound(TaskKind task, GateKind kind, int n);

/// Number of ordered placement sequences, (n(n-1)/2)^N, exactly.
BigInt config_count(int n, std::uint64_t entanglers);

}  // namespace qcsearch
