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
#include <iosfwd>
#include <span>
#include <vector>

namespace qcsearch {

/// sqrt(p (1 - p) / n_samples). Throws std::domain_error for p outside [0, 1]
/// or n_samples == 0.
double binomial_sigma(double p, std::size_t n_samples);

/// Posterior over the success probability p on a uniform grid, flat prior.
struct Posterior {
  std::vector<double> grid;     // p values, grid[i] = i / (bins - 1)
  std::vector<double> weights;  // non-negative, sum to 1

  std::size_t mode_index() const;
  double mode() const { return grid[mode_index()]; }
  double mean() const;
};

inline constexpr std::size_t kDefaultPosteriorBins = 10001;

/// weights[i] proportional to p_i^k (1 - p_i)^(n - k) for k = n_perfect.
Posterior bayes_posterior(std::size_t n_perfect, std::size_t n_samples,
                          std::size_t bins = kDefaultPosteriorBins);

struct ErrorBars {
  double lo = 0.0;
  double hi = 1.0;
};

/// Scales the posterior to unit peak and walks outward from the mode on each
/// side; each bar is the last grid p whose scaled weight is still >= 1/sqrt(e).
/// A side with no crossing is clamped to the grid end (0 or 1).
ErrorBars error_bars(const Posterior& posterior);

/// 1 - (1 - p)^n_trial
double success_probability(double p, std::size_t n_trial);

struct Histogram {
  std::vector<double> bin_edges;     // bins + 1 edges over [0, 1]
  std::vector<std::size_t> counts;  // one per bin

  std::size_t bins() const { return counts.size(); }
  std::size_t total() const;
};

inline constexpr std::size_t kDefaultHistogramBins = 100;

/// Uniform-width histogram of fidelities over [0, 1]. Values in
/// (1, 1 + 1e-12] are clamped to 1 and land in the last bin; anything else
/// outside [0, 1] throws std::domain_error.
Histogram fidelity_histogram(std::span<const double> fidelities,
                             std::size_t bins = kDefaultHistogramBins);

/// "bin_center,count" rows.
void write_csv(std::ostream& out, const Histogram& histogram);
/// "p,weight" rows.
void write_csv(std::ostream& out, const Posterior& posterior);

}  // namespace qcsearch
