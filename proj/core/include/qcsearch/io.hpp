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

// File formats: JSON state/unitary fixtures (arrays of [re, im], matrices
// row-major), the circuit JSON format, JSONL trial records and sweep CSV.

#include <filesystem>
#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "qcsearch/circuit.hpp"
#include "qcsearch/grape.hpp"
#include "qcsearch/search.hpp"
#include "qcsearch/tensor.hpp"

namespace qcsearch::io {

using nlohmann::json;

inline constexpr int kCircuitFormatVersion = 1;

json state_to_json(const StateVector& state);
/// Accepts [[re, im], ...]. Throws std::invalid_argument on malformed input.
StateVector state_from_json(const json& j);

json unitary_to_json(const UnitaryMatrix& u);
/// Accepts [[[re, im], ...], ...] (rows).
UnitaryMatrix unitary_from_json(const json& j);

/// {"kind": "state"|"unitary", "data": ...}
json target_to_json(const Target& target);
/// Accepts the tagged form above, or a bare array (depth decides state vs
/// unitary).
Target target_from_json(const json& j);

/// {version: 1, n, kind: "cnot"|"b", placements: [[i, j], ...], angles: [...]}
json circuit_to_json(const ParameterizedCircuit& circuit);
ParameterizedCircuit circuit_from_json(const json& j);

json config_to_json(const GateConfiguration& config);
GateConfiguration config_from_json(const json& j);

/// One gate per line, e.g. "rot q0 0.1 0.2 0.3" and "cnot q0 q1".
std::string circuit_to_text(const ParameterizedCircuit& circuit);

/// Deterministic record (no wall time).
json trial_to_json(const TrialRecord& record, std::size_t circuit_size);

/// Header plus one row per point: N,n_samples,n_perfect,p_num,err_lo,err_hi.
void write_sweep_csv(std::ostream& out, const SweepResult& result);

json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

/// Shortest round-trip decimal form of a double.
std::string format_double(double value);

}  // namespace qcsearch::io
