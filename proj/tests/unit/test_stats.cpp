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
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "qcsearch/stats.hpp"

using namespace qcsearch;

TEST_SUITE("stats") {

TEST_CASE("binomial sigma") {
  CHECK(binomial_sigma(0.5, 100) == doctest::Approx(0.05).epsilon(1e-15));
  CHECK(binomial_sigma(0.0, 37) == 0.0);
  CHECK(binomial_sigma(0.08, 100) == doctest::Approx(0.0271293).epsilon(1e-6));
  CHECK_THROWS_AS(binomial_sigma(1.2, 10), std::domain_error);
  CHECK_THROWS_AS(binomial_sigma(0.5, 0), std::domain_error);
}

TEST_CASE("binomial sigma matches simulated proportions") {
  std::mt19937_64 eng(2718);
  std::binomial_distribution<int> draw(100, 0.08);
  constexpr int kDraws = 1000000;
  double sum = 0.0, sum2 = 0.0;
  for (int i = 0; i < kDraws; ++i) {
    const double p = draw(eng) / 100.0;
    sum += p;
    sum2 += p * p;
  }
  const double mean = sum / kDraws;
  const double sd = std::sqrt(sum2 / kDraws - mean * mean);
  CHECK(std::abs(sd / binomial_sigma(0.08, 100) - 1.0) < 0.01);
}

TEST_CASE("posterior shape") {
  const auto zero = bayes_posterior(0, 100);
  CHECK(zero.grid.size() == kDefaultPosteriorBins);
  CHECK(zero.mode() == 0.0);
  const auto half = bayes_posterior(50, 100);
  CHECK(half.mode() == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(std::abs(half.mean() - 51.0 / 102.0) < 1.0 / (kDefaultPosteriorBins - 1));
  for (const auto& post : {zero, half, bayes_posterior(100, 100), bayes_posterior(3, 7, 101)}) {
    const double total = std::accumulate(post.weights.begin(), post.weights.end(), 0.0);
    CHECK(std::abs(total - 1.0) < 1e-12);
    CHECK(std::all_of(post.weights.begin(), post.weights.end(),
                      [](double w) { return w >= 0.0; }));
  }
  CHECK_THROWS(bayes_posterior(5, 4));
}

TEST_CASE("posterior survives extreme counts") {
  const auto post = bayes_posterior(4000, 10000);
  CHECK(post.mode() == doctest::Approx(0.4).epsilon(1e-9));
  const auto bars = error_bars(post);
  CHECK(bars.hi - bars.lo == doctest::Approx(2 * binomial_sigma(0.4, 10000)).epsilon(0.05));
}

TEST_CASE("error bars track the binomial sigma") {
  for (int k : {30, 50, 70}) {
    const double p = k / 100.0;
    const auto bars = error_bars(bayes_posterior(k, 100));
    const double sigma = binomial_sigma(p, 100);
    CHECK(std::abs((p - bars.lo) / sigma - 1.0) < 0.1);
    CHECK(std::abs((bars.hi - p) / sigma - 1.0) < 0.1);
  }
  const auto mid = error_bars(bayes_posterior(50, 100));
  CHECK(std::abs((0.5 - mid.lo) - (mid.hi - 0.5)) < 2e-4);
}

TEST_CASE("one-sided error bars at the endpoints") {
  const auto none = error_bars(bayes_posterior(0, 100));
  CHECK(none.lo == 0.0);
  CHECK(none.hi > 0.0);
  CHECK(none.hi < 0.05);
  const auto all = error_bars(bayes_posterior(100, 100));
  CHECK(all.hi == 1.0);
  CHECK(all.lo < 1.0);
  CHECK(all.lo > 0.95);
}

TEST_CASE("posterior is stable under grid refinement") {
  const double coarse = 1.0 / (kDefaultPosteriorBins - 1);
  for (auto [k, n] : {std::pair{8, 100}, {50, 100}, {94, 100}, {0, 30}, {11, 30}, {30, 30}}) {
    const auto a = bayes_posterior(k, n);
    const auto b = bayes_posterior(k, n, 100001);
    CHECK(std::abs(a.mode() - b.mode()) < coarse);
    const auto ba = error_bars(a), bb = error_bars(b);
    CHECK(std::abs(ba.lo - bb.lo) < coarse);
    CHECK(std::abs(ba.hi - bb.hi) < coarse);
  }
}

TEST_CASE("success probability") {
  CHECK(success_probability(0.5, 1) == 0.5);
  CHECK(success_probability(0.94, 2) == doctest::Approx(0.9964).epsilon(1e-12));
  CHECK(success_probability(0.3, 0) == 0.0);
  double prev_p = 0.0;
  for (double p = 0.0; p <= 1.0; p += 0.05) {
    CHECK(success_probability(p, 1) == doctest::Approx(p).epsilon(1e-15));
    double prev_n = -1.0;
    for (std::size_t n = 0; n < 20; ++n) {
      const double s = success_probability(p, n);
      CHECK(s >= prev_n);
      prev_n = s;
    }
    CHECK(success_probability(p, 5) >= prev_p);
    prev_p = success_probability(p, 5);
  }
}

TEST_CASE("success probability matches Bernoulli sequences") {
  std::mt19937_64 eng(1618);
  std::bernoulli_distribution hit(0.26);
  constexpr int kSequences = 1000000;
  int successes = 0;
  for (int s = 0; s < kSequences; ++s) {
    bool any = false;
    for (int t = 0; t < 5; ++t) any = hit(eng) || any;
    successes += any;
  }
  CHECK(std::abs(double(successes) / kSequences - success_probability(0.26, 5)) < 0.002);
}

TEST_CASE("fidelity histograms") {
  const std::vector<double> ones(7, 1.0);
  const auto h1 = fidelity_histogram(ones);
  CHECK(h1.bins() == 100);
  CHECK(h1.bin_edges.size() == 101);
  CHECK(h1.counts.back() == 7);
  CHECK(h1.total() == 7);

  const std::vector<double> two = {0.25, 0.75};
  const auto h2 = fidelity_histogram(two, 2);
  CHECK(h2.counts == std::vector<std::size_t>{1, 1});

  const std::vector<double> edge = {1.0 + 5e-13, 0.0};
  const auto h3 = fidelity_histogram(edge, 10);
  CHECK(h3.counts.front() == 1);
  CHECK(h3.counts.back() == 1);

  const std::vector<double> bad = {1.1};
  CHECK_THROWS(fidelity_histogram(bad));
  CHECK(fidelity_histogram(std::vector<double>{}).total() == 0);
}

TEST_CASE("csv export") {
  std::ostringstream out;
  write_csv(out, fidelity_histogram(std::vector<double>{0.25, 0.75}, 2));
  CHECK(out.str() == "bin_center,count\n0.25,1\n0.75,1\n");
  std::ostringstream post;
  write_csv(post, bayes_posterior(1, 2, 3));
  CHECK(post.str().rfind("p,weight\n", 0) == 0);
}

}  // TEST_SUITE
