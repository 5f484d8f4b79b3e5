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

// Experiment specs, run manifests and the command implementations behind the
// qcsearch CLI.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "qcsearch/bounds.hpp"
#include "qcsearch/grape.hpp"
#include "qcsearch/search.hpp"

namespace qcsearch {

inline constexpr const char* kToolName = "qcsearch";
inline constexpr const char* kToolVersion = "0.1.0";

// Exit codes shared by the CLI commands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNotFound = 2;
inline constexpr int kExitError = 1;

enum class Tier { Fast, Full };
std::string_view to_string(Tier tier);
Tier parse_tier(std::string_view text);

struct ExperimentSpec {
  TaskKind task = TaskKind::StatePrep;
  GateKind kind = GateKind::CNOT;
  int n = 2;
  std::optional<std::size_t> size_from;  // defaults to the lower bound
  std::size_t size_to = 0;
  std::size_t samples = 100;
  OptimizerSettings optimizer;
  std::optional<std::uint64_t> seed;  // required before running
  std::string target = "haar";        // "haar", "toffoli" or a JSON file path
  bool per_trial_targets = false;
  std::string fixture;  // named configuration, e.g. "toffoli4_cnot15"
  std::size_t histogram_bins = 100;
  std::size_t workers = 1;
  Tier tier = Tier::Fast;
  std::filesystem::path output_dir = "out";

  /// Throws std::invalid_argument describing the first violated constraint.
  void validate() const;
  /// Sizes covered by this spec.
  std::vector<std::size_t> sizes() const;
  /// n >= 5 unitary synthesis or n >= 7 state preparation.
  bool long_running() const;
};

/// Missing keys keep their defaults.
ExperimentSpec spec_from_json(const nlohmann::json& j);
nlohmann::json spec_to_json(const ExperimentSpec& spec);

std::string sha256_hex(const std::string& bytes);

struct ManifestOutput {
  std::string path;  // relative to the output directory
  std::string sha256;
};

struct RunManifest {
  std::string command;
  nlohmann::json spec;
  std::string started;   // ISO-8601 UTC
  std::string finished;
  std::vector<ManifestOutput> outputs;
  nlohmann::json timings = nlohmann::json::object();

  nlohmann::json to_json() const;
};

std::string utc_timestamp();

/// Resolves the spec's target source. Haar targets come from
/// RngSeed{seed, kSharedTargetStream} unless per_trial_targets is set.
TargetSource resolve_targets(const ExperimentSpec& spec);

/// Named configuration fixtures ("toffoli4_cnot15").
GateConfiguration named_fixture(const std::string& name);

struct BoundsRow {
  int n = 0;
  std::uint64_t lower_bound = 0;
  BigInt config_count;
};

std::vector<BoundsRow> bounds_table(TaskKind task, GateKind kind, int n_from, int n_to);
/// "~1e47"-style order of magnitude, exact below 1e7.
std::string approx_count(const BigInt& count);
void write_bounds_csv(std::ostream& out, const std::vector<BoundsRow>& rows);
nlohmann::json bounds_to_json(const std::vector<BoundsRow>& rows);

// Each command writes its payloads and manifest.json into spec.output_dir and
// returns an exit code. Progress lines go to `log`.
int cmd_synthesize(const ExperimentSpec& spec, std::ostream& log);
int cmd_sweep(const ExperimentSpec& spec, std::ostream& log);
int cmd_histogram(const ExperimentSpec& spec, std::ostream& log);
int cmd_scan(const ExperimentSpec& spec, std::ostream& log);

}  // namespace qcsearch
