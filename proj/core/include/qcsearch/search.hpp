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
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qcsearch/bounds.hpp"
#include "qcsearch/circuit.hpp"
#include "qcsearch/grape.hpp"
#include "qcsearch/random.hpp"

namespace qcsearch {

/// One sampled configuration and its optimization outcome.
struct TrialRecord {
  std::size_t trial_index = 0;
  GateConfiguration config;
  OptimizationResult result;
  double wall_time = 0.0;  // seconds
  std::optional<std::string> error;  // set when the optimizer threw
};

struct SweepPoint {
  std::size_t circuit_size = 0;
  std::size_t n_samples = 0;
  std::size_t n_perfect = 0;
  double p_num = 0.0;
  double err_lo = 0.0;
  double err_hi = 1.0;
};

struct SweepResult {
  TaskKind task = TaskKind::StatePrep;
  GateKind kind = GateKind::CNOT;
  int n = 0;
  std::vector<SweepPoint> points;  // strictly increasing circuit_size
  std::optional<std::size_t> min_perfect_size;  // smallest N with a perfect trial
  std::optional<std::size_t> threshold_size;    // smallest N with p_num > 0.5
  std::vector<std::vector<TrialRecord>> trials;  // parallel to points
};

/// Where each trial's target comes from.
class TargetSource {
 public:
  /// The same target for every trial.
  static TargetSource shared(Target target);
  /// A fresh Haar target per trial, drawn from the trial's stream.
  static TargetSource per_trial_haar(TaskKind task, int n);

  Target for_trial(const RngSeed& trial_rng) const;
  TaskKind task() const { return task_; }
  int num_qubits() const { return n_; }

 private:
  TaskKind task_ = TaskKind::StatePrep;
  int n_ = 0;
  std::optional<Target> shared_;
};

struct SearchOptions {
  std::size_t workers = 1;
  /// Called from worker threads after each finished trial, in completion
  /// order. Must be thread-safe.
  std::function<void(const TrialRecord&)> on_trial;
};

// Sub-stream tags of a trial's RngSeed.
inline constexpr std::uint64_t kConfigStreamTag = 1;
inline constexpr std::uint64_t kOptimizerStreamTag = 2;
inline constexpr std::uint64_t kTargetStreamTag = 3;

/// Stream reserved for the per-sweep shared Haar target.
inline constexpr std::uint64_t kSharedTargetStream = ~std::uint64_t{0};

/// Per-circuit-size master seed used by sweep().
std::uint64_t size_seed(std::uint64_t master_seed, std::size_t circuit_size);

/// N placements drawn independently and uniformly from the n(n-1)/2 pairs.
GateConfiguration sample_config(int n, std::size_t circuit_size, GateKind kind,
                                const RngSeed& rng);

/// Trial t samples its configuration from RngSeed{master_seed, t}, optimizes
/// it and is stored at index t regardless of which worker ran it.
std::vector<TrialRecord> run_trials(const TargetSource& targets, GateKind kind,
                                    std::size_t circuit_size,
                                    std::size_t n_samples,
                                    const OptimizerSettings& settings,
                                    std::uint64_t master_seed,
                                    const SearchOptions& options = {});

/// Like run_trials, but every trial optimizes the same configuration from its
/// own optimizer stream.
std::vector<TrialRecord> run_fixed_trials(const GateConfiguration& config,
                                          const TargetSource& targets,
                                          std::size_t n_samples,
                                          const OptimizerSettings& settings,
                                          std::uint64_t master_seed,
                                          const SearchOptions& options = {});

/// Summarizes perfect counts of a trial batch with Bayesian error bars.
SweepPoint summarize(std::size_t circuit_size,
                     const std::vector<TrialRecord>& trials);

/// Fills min_perfect_size and threshold_size from the points.
void locate_thresholds(SweepResult& result);

/// Runs one trial batch per circuit size, each seeded with
/// size_seed(master_seed, N).
SweepResult sweep(const TargetSource& targets, GateKind kind,
                  const std::vector<std::size_t>& sizes, std::size_t n_samples,
                  const OptimizerSettings& settings, std::uint64_t master_seed,
                  const SearchOptions& options = {});

/// Convenience overload: one Haar target for the whole sweep, drawn from
/// RngSeed{master_seed, kSharedTargetStream}.
SweepResult sweep(TaskKind task, GateKind kind, int n,
                  const std::vector<std::size_t>& sizes, std::size_t n_samples,
                  const OptimizerSettings& settings, std::uint64_t master_seed,
                  const SearchOptions& options = {});

/// Contiguous sizes [first, last]; `first` defaults to the lower bound.
std::vector<std::size_t> size_range(TaskKind task, GateKind kind, int n,
                                    std::optional<std::size_t> first,
                                    std::size_t last);

struct ScanEntry {
  std::size_t index = 0;  // lexicographic rank of the configuration
  GateConfiguration config;
  OptimizationResult result;
};

inline constexpr std::uint64_t kDefaultScanCap = 100000;

/// Configuration with lexicographic rank `index` (first placement most
/// significant, pairs ordered as in all_pairs()).
GateConfiguration config_at(int n, std::size_t circuit_size, GateKind kind,
                            std::uint64_t index);

/// Optimizes every configuration of size N. Configuration i uses optimizer
/// stream RngSeed{seed, i}. Throws std::length_error when the configuration
/// count exceeds `cap`.
std::vector<ScanEntry> exhaustive_scan(const Target& target, GateKind kind,
                                       std::size_t circuit_size,
                                       const OptimizerSettings& settings,
                                       std::uint64_t seed,
                                       std::uint64_t cap = kDefaultScanCap,
                                       const SearchOptions& options = {});

double perfect_fraction(const std::vector<ScanEntry>& entries);

/// Re-optimizes only the rotations of a known-good configuration for a new
/// target.
OptimizationResult retarget(const GateConfiguration& config,
                            const Target& new_target,
                            const OptimizerSettings& settings,
                            const RngSeed& rng);

/// Runs job(i) for i in [0, count) on `workers` threads. The first exception
/// thrown by any job is rethrown after all threads finish.
void parallel_for(std::size_t count, std::size_t workers,
                  const std::function<void(std::size_t)>& job);

}  // namespace qcsearch
