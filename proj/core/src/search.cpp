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

#include "qcsearch/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

#include "qcsearch/stats.hpp"

namespace qcsearch {

TargetSource TargetSource::shared(Target target) {
  TargetSource s;
  s.task_ = target.task();
  s.n_ = target.num_qubits();
  s.shared_ = std::move(target);
  return s;
}

TargetSource TargetSource::per_trial_haar(TaskKind task, int n) {
  check_qubit_count(n);
  TargetSource s;
  s.task_ = task;
  s.n_ = n;
  return s;
}

Target TargetSource::for_trial(const RngSeed& trial_rng) const {
  if (shared_) return *shared_;
  return haar_target(task_, n_, trial_rng.child(kTargetStreamTag));
}

std::uint64_t size_seed(std::uint64_t master_seed, std::size_t circuit_size) {
  return mix64(master_seed ^ mix64(0x517cc1b727220a95ULL + circuit_size));
}

GateConfiguration sample_config(int n, std::size_t circuit_size, GateKind kind,
                                const RngSeed& rng) {
  if (circuit_size == 0) return GateConfiguration(n, kind);
  if (n < 2) throw std::domain_error("sample_config: n must be >= 2");
  const auto pairs = all_pairs(n);
  Engine engine = make_engine(rng);
  std::uniform_int_distribution<std::size_t> pick(0, pairs.size() - 1);
  std::vector<EntanglerPlacement> placements;
  placements.reserve(circuit_size);
  for (std::size_t i = 0; i < circuit_size; ++i) placements.push_back(pairs[pick(engine)]);
  return GateConfiguration(n, kind, std::move(placements));
}

void parallel_for(std::size_t count, std::size_t workers,
                  const std::function<void(std::size_t)>& job) {
  workers = std::max<std::size_t>(1, std::min(workers, count));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto drain = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        job(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (workers == 1) {
    drain();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(drain);
  }
  if (failure) std::rethrow_exception(failure);
}

std::vector<TrialRecord> run_trials(const TargetSource& targets, GateKind kind,
                                    std::size_t circuit_size,
                                    std::size_t n_samples,
                                    const OptimizerSettings& settings,
                                    std::uint64_t master_seed,
                                    const SearchOptions& options) {
  settings.validate();
  const int n = targets.num_qubits();
  std::vector<std::optional<TrialRecord>> slots(n_samples);
  parallel_for(n_samples, options.workers, [&](std::size_t t) {
    const RngSeed trial_rng{master_seed, t};
    const auto start = std::chrono::steady_clock::now();
    TrialRecord record{t, sample_config(n, circuit_size, kind,
                                        trial_rng.child(kConfigStreamTag)),
                       {}, 0.0, std::nullopt};
    try {
      const Target target = targets.for_trial(trial_rng);
      record.result = optimize(record.config, target, settings,
                               trial_rng.child(kOptimizerStreamTag));
    } catch (const std::exception& e) {
      record.error = e.what();
    }
    record.wall_time =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (options.on_trial) options.on_trial(record);
    slots[t] = std::move(record);
  });
  std::vector<TrialRecord> records;
  records.reserve(n_samples);
  for (auto& s : slots) records.push_back(std::move(*s));
  return records;
}

std::vector<TrialRecord> run_fixed_trials(const GateConfiguration& config,
                                          const TargetSource& targets,
                                          std::size_t n_samples,
                                          const OptimizerSettings& settings,
                                          std::uint64_t master_seed,
                                          const SearchOptions& options) {
  settings.validate();
  if (config.num_qubits() != targets.num_qubits()) {
    throw std::invalid_argument("run_fixed_trials: qubit count mismatch");
  }
  std::vector<std::optional<TrialRecord>> slots(n_samples);
  parallel_for(n_samples, options.workers, [&](std::size_t t) {
    const RngSeed trial_rng{master_seed, t};
    const auto start = std::chrono::steady_clock::now();
    TrialRecord record{t, config, {}, 0.0, std::nullopt};
    try {
      record.result = optimize(config, targets.for_trial(trial_rng), settings,
                               trial_rng.child(kOptimizerStreamTag));
    } catch (const std::exception& e) {
      record.error = e.what();
    }
    record.wall_time =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (options.on_trial) options.on_trial(record);
    slots[t] = std::move(record);
  });
  std::vector<TrialRecord> records;
  records.reserve(n_samples);
  for (auto& s : slots) records.push_back(std::move(*s));
  return records;
}

SweepPoint summarize(std::size_t circuit_size, const std::vector<TrialRecord>& trials) {
  SweepPoint point;
  point.circuit_size = circuit_size;
  point.n_samples = trials.size();
  point.n_perfect = static_cast<std::size_t>(std::count_if(
      trials.begin(), trials.end(),
      [](const TrialRecord& r) { return !r.error && r.result.perfect; }));
  if (point.n_samples == 0) return point;
  point.p_num = static_cast<double>(point.n_perfect) / static_cast<double>(point.n_samples);
  const ErrorBars bars = error_bars(bayes_posterior(point.n_perfect, point.n_samples));
  point.err_lo = std::min(bars.lo, point.p_num);
  point.err_hi = std::max(bars.hi, point.p_num);
  return point;
}

void locate_thresholds(SweepResult& result) {
  result.min_perfect_size.reset();
  result.threshold_size.reset();
  for (std::size_t i = 1; i < result.points.size(); ++i) {
    if (result.points[i].circuit_size <= result.points[i - 1].circuit_size) {
      throw std::invalid_argument("sweep points must have strictly increasing sizes");
    }
  }
  for (const auto& p : result.points) {
    if (!result.min_perfect_size && p.n_perfect > 0) result.min_perfect_size = p.circuit_size;
    if (!result.threshold_size && p.p_num > 0.5) result.threshold_size = p.circuit_size;
  }
}

SweepResult sweep(const TargetSource& targets, GateKind kind,
                  const std::vector<std::size_t>& sizes, std::size_t n_samples,
                  const OptimizerSettings& settings, std::uint64_t master_seed,
                  const SearchOptions& options) {
  if (!std::is_sorted(sizes.begin(), sizes.end()) ||
      std::adjacent_find(sizes.begin(), sizes.end()) != sizes.end()) {
    throw std::invalid_argument("sweep: sizes must be strictly increasing");
  }
  SweepResult result;
  result.task = targets.task();
  result.kind = kind;
  result.n = targets.num_qubits();
  for (std::size_t size : sizes) {
    auto trials = run_trials(targets, kind, size, n_samples, settings,
                             size_seed(master_seed, size), options);
    result.points.push_back(summarize(size, trials));
    result.trials.push_back(std::move(trials));
  }
  locate_thresholds(result);
  return result;
}

SweepResult sweep(TaskKind task, GateKind kind, int n,
                  const std::vector<std::size_t>& sizes, std::size_t n_samples,
                  const OptimizerSettings& settings, std::uint64_t master_seed,
                  const SearchOptions& options) {
  const auto target =
      TargetSource::shared(haar_target(task, n, RngSeed{master_seed, kSharedTargetStream}));
  return sweep(target, kind, sizes, n_samples, settings, master_seed, options);
}

std::vector<std::size_t> size_range(TaskKind task, GateKind kind, int n,
                                    std::optional<std::size_t> first,
                                    std::size_t last) {
  const std::size_t begin = first ? *first : lower_bound(task, kind, n);
  if (last < begin) {
    throw std::invalid_argument("size range is empty (" + std::to_string(begin) +
                                ".." + std::to_string(last) + ")");
  }
  std::vector<std::size_t> sizes;
  for (std::size_t s = begin; s <= last; ++s) sizes.push_back(s);
  return sizes;
}

GateConfiguration config_at(int n, std::size_t circuit_size, GateKind kind,
                            std::uint64_t index) {
  if (index >= config_count(n, circuit_size)) {
    throw std::out_of_range("config_at: index " + std::to_string(index) +
                            " is past the last configuration");
  }
  const auto pairs = all_pairs(n);
  std::vector<EntanglerPlacement> placements(circuit_size);
  for (std::size_t i = circuit_size; i-- > 0;) {
    placements[i] = pairs[index % pairs.size()];
    index /= pairs.size();
  }
  return GateConfiguration(n, kind, std::move(placements));
}

std::vector<ScanEntry> exhaustive_scan(const Target& target, GateKind kind,
                                       std::size_t circuit_size,
                                       const OptimizerSettings& settings,
                                       std::uint64_t seed, std::uint64_t cap,
                                       const SearchOptions& options) {
  settings.validate();
  const int n = target.num_qubits();
  const BigInt count = config_count(n, circuit_size);
  if (count > cap) {
    throw std::length_error("exhaustive_scan: " + count.str() +
                            " configurations exceed the cap of " + std::to_string(cap));
  }
  const auto total = count.convert_to<std::size_t>();
  std::vector<std::optional<ScanEntry>> slots(total);
  parallel_for(total, options.workers, [&](std::size_t i) {
    GateConfiguration config = config_at(n, circuit_size, kind, i);
    OptimizationResult result = optimize(config, target, settings, RngSeed{seed, i});
    slots[i] = ScanEntry{i, std::move(config), std::move(result)};
  });
  std::vector<ScanEntry> entries;
  entries.reserve(total);
  for (auto& s : slots) entries.push_back(std::move(*s));
  return entries;
}

double perfect_fraction(const std::vector<ScanEntry>& entries) {
  if (entries.empty()) return 0.0;
  const auto perfect = std::count_if(entries.begin(), entries.end(),
                                     [](const ScanEntry& e) { return e.result.perfect; });
  return static_cast<double>(perfect) / static_cast<double>(entries.size());
}

OptimizationResult retarget(const GateConfiguration& config,
                            const Target& new_target,
                            const OptimizerSettings& settings,
                            const RngSeed& rng) {
  return optimize(config, new_target, settings, rng);
}

}  // namespace qcsearch
