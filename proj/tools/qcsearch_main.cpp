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

// qcsearch: random-search quantum circuit synthesis from the command line.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <utility>

#include "CLI11.hpp"
#include "qcsearch/bounds.hpp"
#include "qcsearch/experiment.hpp"
#include "qcsearch/io.hpp"

namespace {

using qcsearch::ExperimentSpec;

// "7" or "6..10".
std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const std::size_t v = std::stoul(text);
    return {v, v};
  }
  return {std::stoul(text.substr(0, dots)), std::stoul(text.substr(dots + 2))};
}

struct ExperimentFlags {
  std::string spec_file;
  std::string task, kind, range, target, fixture, tier, out;
  std::optional<int> n;
  std::optional<std::size_t> samples, restarts, max_iters, workers, bins;
  std::optional<std::uint64_t> seed;
  std::optional<double> perfect_threshold;
  bool per_trial_targets = false;

  void attach(CLI::App* app, bool with_bins) {
    app->add_option("--spec", spec_file, "JSON experiment spec; flags override its fields")
        ->check(CLI::ExistingFile);
    app->add_option("--task", task, "sp (state preparation) or u (unitary synthesis)");
    app->add_option("--kind", kind, "entangler: cnot or b");
    app->add_option("--n", n, "qubit count");
    app->add_option("--N", range, "circuit size, single value or FROM..TO");
    app->add_option("--samples", samples, "trials per circuit size");
    app->add_option("--seed", seed, "master seed (required)");
    app->add_option("--target", target, "haar, toffoli, or a JSON target file");
    app->add_flag("--per-trial-targets", per_trial_targets,
                  "draw a fresh Haar target for every trial");
    app->add_option("--fixture", fixture, "named configuration (toffoli4_cnot15)");
    app->add_option("--max-iters", max_iters, "gradient-ascent iteration cap");
    app->add_option("--restarts", restarts, "random restarts per configuration");
    app->add_option("--perfect-threshold", perfect_threshold,
                    "infidelity below which a circuit counts as perfect");
    app->add_option("--workers", workers, "worker threads");
    app->add_option("--tier", tier, "fast or full (long-running sizes)");
    app->add_option("--out", out, "output directory");
    if (with_bins) app->add_option("--bins", bins, "histogram bins");
  }

  ExperimentSpec build() const {
    ExperimentSpec spec;
    if (!spec_file.empty()) spec = qcsearch::spec_from_json(qcsearch::io::read_json_file(spec_file));
    if (!task.empty()) spec.task = qcsearch::parse_task_kind(task);
    if (!kind.empty()) spec.kind = qcsearch::parse_gate_kind(kind);
    if (n) spec.n = *n;
    if (!range.empty()) {
      const auto [from, to] = parse_range(range);
      spec.size_from = from;
      spec.size_to = to;
    }
    if (samples) spec.samples = *samples;
    if (seed) spec.seed = *seed;
    if (!target.empty()) spec.target = target;
    if (per_trial_targets) spec.per_trial_targets = true;
    if (!fixture.empty()) spec.fixture = fixture;
    if (max_iters) spec.optimizer.max_iterations = *max_iters;
    if (restarts) spec.optimizer.restarts = *restarts;
    if (perfect_threshold) spec.optimizer.perfect_threshold = *perfect_threshold;
    if (workers) spec.workers = *workers;
    if (!tier.empty()) spec.tier = qcsearch::parse_tier(tier);
    if (!out.empty()) spec.output_dir = out;
    if (bins) spec.histogram_bins = *bins;
    return spec;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Random-search quantum circuit synthesis"};
  app.set_version_flag("--version", qcsearch::kToolVersion);
  app.require_subcommand(1);

  std::string b_task = "sp", b_kind = "cnot", b_range = "2..8", b_format = "csv";
  auto* bounds = app.add_subcommand("bounds", "lower bounds and configuration counts");
  bounds->add_option("--task", b_task, "sp or u");
  bounds->add_option("--kind", b_kind, "cnot or b");
  bounds->add_option("--n", b_range, "qubit count or FROM..TO");
  bounds->add_option("--format", b_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  ExperimentFlags synth_flags, sweep_flags, hist_flags, scan_flags;
  auto* synth = app.add_subcommand("synthesize", "search for a perfect circuit at one size");
  synth_flags.attach(synth, false);
  auto* sweep = app.add_subcommand("sweep", "perfect-fidelity probability versus size");
  sweep_flags.attach(sweep, false);
  auto* hist = app.add_subcommand("histogram", "distribution of optimized fidelities");
  hist_flags.attach(hist, true);
  auto* scan = app.add_subcommand("scan", "optimize every configuration of one size");
  scan_flags.attach(scan, false);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*bounds) {
      const auto [from, to] = parse_range(b_range);
      const auto rows = qcsearch::bounds_table(qcsearch::parse_task_kind(b_task),
                                               qcsearch::parse_gate_kind(b_kind),
                                               static_cast<int>(from), static_cast<int>(to));
      if (b_format == "json") {
        std::cout << qcsearch::bounds_to_json(rows).dump(2) << '\n';
      } else {
        qcsearch::write_bounds_csv(std::cout, rows);
      }
      return qcsearch::kExitOk;
    }
    if (*synth) return qcsearch::cmd_synthesize(synth_flags.build(), std::cerr);
    if (*sweep) return qcsearch::cmd_sweep(sweep_flags.build(), std::cerr);
    if (*hist) return qcsearch::cmd_histogram(hist_flags.build(), std::cerr);
    if (*scan) return qcsearch::cmd_scan(scan_flags.build(), std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return qcsearch::kExitError;
  }
  return qcsearch::kExitError;
}
