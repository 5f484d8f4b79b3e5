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

#include <algorithm>
#include <array>
#include <atomic>
#include <mutex>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "qcsearch/search.hpp"

using namespace qcsearch;

namespace {

std::size_t count_perfect(const std::vector<TrialRecord>& trials) {
  return static_cast<std::size_t>(std::count_if(
      trials.begin(), trials.end(), [](const TrialRecord& r) { return r.result.perfect; }));
}

void check_same(const std::vector<TrialRecord>& a, const std::vector<TrialRecord>& b) {
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].trial_index == i);
    CHECK(a[i].trial_index == b[i].trial_index);
    CHECK(a[i].config == b[i].config);
    CHECK(a[i].result.fidelity == b[i].result.fidelity);
    CHECK(a[i].result.params == b[i].result.params);
    CHECK(a[i].result.iterations == b[i].result.iterations);
  }
}

// First perfect configuration found by random search with the given seed.
std::optional<GateConfiguration> find_perfect(const Target& target, GateKind kind,
                                              std::size_t size, std::uint64_t seed,
                                              std::size_t max_trials) {
  for (std::size_t t = 0; t < max_trials; ++t) {
    const RngSeed rng{seed, t};
    const auto cfg = sample_config(target.num_qubits(), size, kind, rng.child(kConfigStreamTag));
    if (optimize(cfg, target, {}, rng.child(kOptimizerStreamTag)).perfect) return cfg;
  }
  return std::nullopt;
}

}  // namespace

TEST_SUITE("search") {

TEST_CASE("sampling on two qubits has one choice") {
  const auto cfg = sample_config(2, 9, GateKind::CNOT, {1, 2});
  CHECK(cfg.size() == 9);
  for (const auto& p : cfg.placements()) CHECK(p == EntanglerPlacement{0, 1});
  CHECK(sample_config(3, 0, GateKind::B, {1, 2}).size() == 0);
}

TEST_CASE("sampling is uniform over pairs") {
  constexpr int kSamples = 100000;
  std::array<int, 3> counts{};
  for (int s = 0; s < kSamples; ++s) {
    const auto p = sample_config(3, 1, GateKind::CNOT, {4242, static_cast<std::uint64_t>(s)})
                       .placements()[0];
    ++counts[p.first + p.second - 1];  // (0,1)->0, (0,2)->1, (1,2)->2
  }
  double chi2 = 0.0;
  for (int c : counts) {
    CHECK(std::abs(c / double(kSamples) - 1.0 / 3.0) < 0.01);
    const double e = kSamples / 3.0;
    chi2 += (c - e) * (c - e) / e;
  }
  CHECK(chi2 < 13.82);  // chi-square, 2 dof, p = 0.001
  CHECK(sample_config(4, 12, GateKind::CNOT, {5, 5}) ==
        sample_config(4, 12, GateKind::CNOT, {5, 5}));
}

TEST_CASE("two-qubit state preparation with one CNOT") {
  const auto trials = run_trials(TargetSource::per_trial_haar(TaskKind::StatePrep, 2),
                                 GateKind::CNOT, 1, 20, {}, 101);
  CHECK(count_perfect(trials) == 20);
}

TEST_CASE("three-qubit state preparation minima") {
  const auto cnot = run_trials(TargetSource::per_trial_haar(TaskKind::StatePrep, 3),
                               GateKind::CNOT, 2, 20, {}, 102);
  CHECK(count_perfect(cnot) == 0);
  const auto b = run_trials(TargetSource::per_trial_haar(TaskKind::StatePrep, 3),
                            GateKind::B, 2, 20, {}, 103);
  CHECK(count_perfect(b) >= 1);
}

TEST_CASE("trial order and results are independent of the worker count") {
  const auto targets = TargetSource::shared(haar_target(TaskKind::StatePrep, 3, {7, 7}));
  OptimizerSettings s;
  s.max_iterations = 2000;
  const auto serial = run_trials(targets, GateKind::CNOT, 3, 12, s, 55);
  SearchOptions opts;
  opts.workers = 4;
  std::mutex m;
  std::set<std::size_t> seen;
  opts.on_trial = [&](const TrialRecord& r) {
    std::lock_guard lock(m);
    seen.insert(r.trial_index);
  };
  const auto parallel = run_trials(targets, GateKind::CNOT, 3, 12, s, 55, opts);
  check_same(serial, parallel);
  CHECK(seen.size() == 12);
}

TEST_CASE("sweeps are reproducible") {
  OptimizerSettings s;
  s.max_iterations = 3000;
  const std::vector<std::size_t> sizes = {2, 3, 4};
  const auto a = sweep(TaskKind::StatePrep, GateKind::CNOT, 3, sizes, 10, s, 2024);
  SearchOptions opts;
  opts.workers = 3;
  const auto b = sweep(TaskKind::StatePrep, GateKind::CNOT, 3, sizes, 10, s, 2024, opts);
  REQUIRE(a.points.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(a.points[i].circuit_size == sizes[i]);
    CHECK(a.points[i].n_perfect == b.points[i].n_perfect);
    CHECK(a.points[i].err_lo == b.points[i].err_lo);
    check_same(a.trials[i], b.trials[i]);
  }
  CHECK(a.min_perfect_size == b.min_perfect_size);
  CHECK(a.threshold_size == b.threshold_size);
  const auto c = sweep(TaskKind::StatePrep, GateKind::CNOT, 3, sizes, 10, s, 2025);
  CHECK(c.trials[2][0].result.params != a.trials[2][0].result.params);
}

TEST_CASE("summaries and thresholds") {
  std::vector<TrialRecord> trials;
  for (std::size_t i = 0; i < 10; ++i) {
    TrialRecord r{i, GateConfiguration(2, GateKind::CNOT), {}, 0.0, std::nullopt};
    r.result.perfect = i < 3;
    trials.push_back(r);
  }
  const auto p = summarize(4, trials);
  CHECK(p.circuit_size == 4);
  CHECK(p.n_samples == 10);
  CHECK(p.n_perfect == 3);
  CHECK(p.p_num == doctest::Approx(0.3));
  CHECK(p.err_lo <= p.p_num);
  CHECK(p.p_num <= p.err_hi);

  // A trial that threw counts as a sample but never as perfect.
  trials[0].error = "boom";
  CHECK(summarize(4, trials).n_perfect == 2);

  SweepResult r;
  r.points = {{3, 10, 0, 0.0, 0, 0.1}, {4, 10, 5, 0.5, 0.3, 0.7}, {5, 10, 6, 0.6, 0.4, 0.8}};
  locate_thresholds(r);
  CHECK(r.min_perfect_size == 4);
  CHECK(r.threshold_size == 5);
  r.points.pop_back();
  locate_thresholds(r);
  CHECK_FALSE(r.threshold_size.has_value());
  r.points = {{4, 10, 5, 0.5, 0.3, 0.7}, {3, 10, 0, 0.0, 0, 0.1}};
  CHECK_THROWS(locate_thresholds(r));
}

TEST_CASE("size ranges start at the lower bound") {
  CHECK(size_range(TaskKind::StatePrep, GateKind::CNOT, 4, std::nullopt, 10) ==
        std::vector<std::size_t>{6, 7, 8, 9, 10});
  CHECK(size_range(TaskKind::UnitarySynthesis, GateKind::B, 3, 8, 9) ==
        std::vector<std::size_t>{8, 9});
  CHECK_THROWS(size_range(TaskKind::StatePrep, GateKind::CNOT, 4, 9, 8));
}

TEST_CASE("lexicographic enumeration") {
  CHECK(config_at(3, 2, GateKind::CNOT, 0).placements() ==
        std::vector<EntanglerPlacement>{{0, 1}, {0, 1}});
  CHECK(config_at(3, 2, GateKind::CNOT, 1).placements() ==
        std::vector<EntanglerPlacement>{{0, 1}, {0, 2}});
  CHECK(config_at(3, 2, GateKind::CNOT, 3).placements() ==
        std::vector<EntanglerPlacement>{{0, 2}, {0, 1}});
  CHECK(config_at(3, 2, GateKind::CNOT, 8).placements() ==
        std::vector<EntanglerPlacement>{{1, 2}, {1, 2}});
  CHECK_THROWS(config_at(3, 2, GateKind::CNOT, 9));
  std::set<std::vector<EntanglerPlacement>> distinct;
  for (std::uint64_t i = 0; i < 216; ++i) {
    distinct.insert(config_at(4, 3, GateKind::CNOT, i).placements());
  }
  CHECK(distinct.size() == 216);
}

TEST_CASE("exhaustive scans") {
  const auto u2 = haar_target(TaskKind::UnitarySynthesis, 2, {31, 0});
  const auto single = exhaustive_scan(u2, GateKind::CNOT, 3, {}, 31);
  REQUIRE(single.size() == 1);
  CHECK(single[0].result.perfect);

  const auto s3 = haar_target(TaskKind::StatePrep, 3, {32, 0});
  const auto b = exhaustive_scan(s3, GateKind::B, 2, {}, 32);
  REQUIRE(b.size() == 9);
  double best = 0.0;
  for (std::size_t i = 0; i < b.size(); ++i) {
    CHECK(b[i].index == i);
    CHECK(b[i].config == config_at(3, 2, GateKind::B, i));
    best = std::max(best, b[i].result.fidelity);
  }
  CHECK(best > 1.0 - 1e-8);

  const auto c = exhaustive_scan(s3, GateKind::CNOT, 2, {}, 33);
  CHECK(perfect_fraction(c) == 0.0);

  CHECK_THROWS_AS(exhaustive_scan(haar_target(TaskKind::StatePrep, 4, {1, 0}), GateKind::CNOT,
                                  7, {}, 1),
                  std::length_error);
  CHECK_THROWS_AS(exhaustive_scan(s3, GateKind::CNOT, 3, {}, 1, 26), std::length_error);
}

TEST_CASE("retargeting a perfect configuration") {
  const auto original = haar_target(TaskKind::UnitarySynthesis, 3, {5000, 0});
  const auto cfg = find_perfect(original, GateKind::CNOT, 14, 5001, 40);
  REQUIRE(cfg.has_value());
  CHECK(retarget(*cfg, original, {}, {5002, 0}).perfect);
  OptimizerSettings three;
  three.restarts = 3;
  CHECK(retarget(*cfg, haar_target(TaskKind::UnitarySynthesis, 3, {5003, 0}), three,
                 {5004, 0})
            .perfect);
}

TEST_CASE("perfect four-qubit state configurations are target independent") {
  const auto original = haar_target(TaskKind::StatePrep, 4, {6000, 0});
  const auto cfg = find_perfect(original, GateKind::CNOT, 6, 6001, 200);
  REQUIRE(cfg.has_value());
  // A single run from random angles succeeds only about a third of the time
  // at this size, so the check allows ten restarts per target.
  OptimizerSettings ten;
  ten.restarts = 10;
  int perfect = 0;
  for (std::uint64_t s = 0; s < 10; ++s) {
    perfect += retarget(*cfg, haar_target(TaskKind::StatePrep, 4, {6002, s}), ten, {6003, s})
                   .perfect;
  }
  CHECK(perfect >= 9);
}

TEST_CASE("parallel_for propagates failures") {
  std::atomic<int> ran{0};
  parallel_for(50, 4, [&](std::size_t) { ++ran; });
  CHECK(ran == 50);
  CHECK_THROWS_AS(parallel_for(10, 3,
                               [](std::size_t i) {
                                 if (i == 6) throw std::runtime_error("x");
                               }),
                  std::runtime_error);
}

}  // TEST_SUITE
