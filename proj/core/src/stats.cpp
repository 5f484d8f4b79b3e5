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

#include "qcsearch/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace qcsearch {

double binomial_sigma(double p, std::size_t n_samples) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::domain_error("binomial_sigma: p must be in [0, 1]");
  }
  if (n_samples == 0) {
    throw std::domain_error("binomial_sigma: n_samples must be positive");
  }
  return std::sqrt(p * (1.0 - p) / static_cast<double>(n_samples));
}

std::size_t Posterior::mode_index() const {
  return static_cast<std::size_t>(
      std::distance(weights.begin(), std::max_element(weights.begin(), weights.end())));
}

double Posterior::mean() const {
  return std::inner_product(grid.begin(), grid.end(), weights.begin(), 0.0);
}

Posterior bayes_posterior(std::size_t n_perfect, std::size_t n_samples,
                          std::size_t bins) {
  if (n_perfect > n_samples) {
    throw std::invalid_argument("bayes_posterior: n_perfect > n_samples");
  }
  if (bins < 2) throw std::invalid_argument("bayes_posterior: bins must be >= 2");
  const double k = static_cast<double>(n_perfect);
  const double m = static_cast<double>(n_samples - n_perfect);
  Posterior post;
  post.grid.resize(bins);
  post.weights.resize(bins);
  // Log-likelihood; 0 * log(0) is taken as 0.
  std::vector<double> logw(bins);
  double peak = -INFINITY;
  for (std::size_t i = 0; i < bins; ++i) {
    const double p = static_cast<double>(i) / static_cast<double>(bins - 1);
    post.grid[i] = p;
    double lw = 0.0;
    if (k > 0) lw += p > 0.0 ? k * std::log(p) : -INFINITY;
    if (m > 0) lw += p < 1.0 ? m * std::log1p(-p) : -INFINITY;
    logw[i] = lw;
    peak = std::max(peak, lw);
  }
  double total = 0.0;
  for (std::size_t i = 0; i < bins; ++i) {
    post.weights[i] = std::exp(logw[i] - peak);
    total += post.weights[i];
  }
  for (double& w : post.weights) w /= total;
  return post;
}

ErrorBars error_bars(const Posterior& posterior) {
  if (posterior.weights.empty() || posterior.weights.size() != posterior.grid.size()) {
    throw std::invalid_argument("error_bars: malformed posterior");
  }
  const std::size_t mode = posterior.mode_index();
  const double cut = posterior.weights[mode] / std::sqrt(std::exp(1.0));
  std::size_t lo = mode;
  while (lo > 0 && posterior.weights[lo - 1] >= cut) --lo;
  std::size_t hi = mode;
  const std::size_t last = posterior.weights.size() - 1;
  while (hi < last && posterior.weights[hi + 1] >= cut) ++hi;
  return ErrorBars{posterior.grid[lo], posterior.grid[hi]};
}

double success_probability(double p, std::size_t n_trial) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::domain_error("success_probability: p must be in [0, 1]");
  }
  return 1.0 - std::pow(1.0 - p, static_cast<double>(n_trial));
}

std::size_t Histogram::total() const {
  return std::accumulate(counts.begin(), counts.end(), std::size_t{0});
}

Histogram fidelity_histogram(std::span<const double> fidelities, std::size_t bins) {
  if (bins == 0) throw std::invalid_argument("fidelity_histogram: bins must be positive");
  Histogram h;
  h.bin_edges.resize(bins + 1);
  for (std::size_t i = 0; i <= bins; ++i) {
    h.bin_edges[i] = static_cast<double>(i) / static_cast<double>(bins);
  }
  h.counts.assign(bins, 0);
  for (double f : fidelities) {
    if (!(f >= 0.0 && f <= 1.0 + 1e-12)) {
      throw std::domain_error("fidelity_histogram: value " + std::to_string(f) +
                              " outside [0, 1]");
    }
    const double v = std::min(f, 1.0);
    const auto idx = std::min(static_cast<std::size_t>(v * static_cast<double>(bins)), bins - 1);
    ++h.counts[idx];
  }
  return h;
}

void write_csv(std::ostream& out, const Histogram& histogram) {
  out << "bin_center,count\n";
  for (std::size_t i = 0; i < histogram.bins(); ++i) {
    const double center = 0.5 * (histogram.bin_edges[i] + histogram.bin_edges[i + 1]);
    out << center << ',' << histogram.counts[i] << '\n';
  }
}

void write_csv(std::ostream& out, const Posterior& posterior) {
  out << "p,weight\n";
  for (std::size_t i = 0; i < posterior.grid.size(); ++i) {
    out << posterior.grid[i] << ',' << posterior.weights[i] << '\n';
  }
}

}  // namespace qcsearch
