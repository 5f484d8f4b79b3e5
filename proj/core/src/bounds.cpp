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

#include "qcsearch/bounds.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <string>

namespace qcsearch {
namespace {

std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) { return (a + b - 1) / b; }

}  // namespace

std::string_view to_string(TaskKind task) {
  return task == TaskKind::StatePrep ? "sp" : "u";
}

TaskKind parse_task_kind(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (lower == "sp" || lower == "state" || lower == "stateprep") {
    return TaskKind::StatePrep;
  }
  if (lower == "u" || lower == "unitary") return TaskKind::UnitarySynthesis;
  throw std::invalid_argument("unknown task '" + std::string(text) + "'");
}

std::uint64_t lower_bound(TaskKind task, GateKind kind, int n) {
  if (n < 2 || n > 30) {
    throw std::domain_error("lower_bound: n must be in [2, 30], got " +
                            std::to_string(n));
  }
  const auto un = static_cast<std::uint64_t>(n);
  // Free parameters of the target minus those of the initial rotation layer.
  const std::uint64_t deficit = task == TaskKind::StatePrep
                                    ? (std::uint64_t{1} << n) - 1 - un
                                    : (std::uint64_t{1} << (2 * n)) - 1 - 3 * un;
  const std::uint64_t per_gate = (kind == GateKind::CNOT ? 2u : 3u) *
                                 (task == TaskKind::StatePrep ? 1u : 2u);
  return ceil_div(deficit, per_gate);
}

BigInt config_count(int n, std::uint64_t entanglers) {
  if (n < 2) throw std::domain_error("config_count: n must be >= 2");
  const BigInt pairs = BigInt(n) * (n - 1) / 2;
  BigInt result = 1;
  for (std::uint64_t i = 0; i < entanglers; ++i) result *= pairs;
  return result;
}

}  // namespace qcsearch
