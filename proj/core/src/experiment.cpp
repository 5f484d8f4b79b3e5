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

#include "qcsearch/experiment.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "qcsearch/circuit.hpp"
#include "qcsearch/io.hpp"
#include "qcsearch/stats.hpp"

namespace qcsearch {
namespace {

using nlohmann::json;

// Writes payload files into the output directory and records their digests.
class OutputWriter {
 public:
  OutputWriter(const ExperimentSpec& spec, std::string command)
      : dir_(spec.output_dir) {
    std::filesystem::create_directories(dir_);
    manifest_.command = std::move(command);
    manifest_.spec = spec_to_json(spec);
    manifest_.started = utc_timestamp();
  }

  void write(const std::string& relative, const std::string& text) {
    const auto path = dir_ / relative;
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    io::write_text_file(path, text);
    manifest_.outputs.push_back({relative, sha256_hex(text)});
  }

  RunManifest& manifest() { return manifest_; }

  void finish() {
    manifest_.finished = utc_timestamp();
    io::write_text_file(dir_ / "manifest.json", manifest_.to_json().dump(2) + "\n");
  }

 private:
  std::filesystem::path dir_;
  RunManifest manifest_;
};

SearchOptions progress_options(const ExperimentSpec& spec, std::ostream& log,
                               std::mutex& log_mutex) {
  SearchOptions options;
  options.workers = spec.workers;
  options.on_trial = [&log, &log_mutex](const TrialRecord& r) {
    std::lock_guard lock(log_mutex);
    log << "  trial " << r.trial_index << " N=" << r.config.size()
        << " F=" << std::setprecision(12) << r.result.fidelity
        << (r.result.perfect ? " perfect" : "") << '\n';
  };
  return options;
}

std::string jsonl(const std::vector<TrialRecord>& trials, std::size_t size) {
  std::string out;
  for (const auto& r : trials) out += io::trial_to_json(r, size).dump() + "\n";
  return out;
}

json wall_times(const std::vector<TrialRecord>& trials) {
  json out = json::array();
  for (const auto& r : trials) out.push_back(r.wall_time);
  return out;
}

// Trials at a single circuit size, from a fixture or from random sampling.
std::vector<TrialRecord> single_size_trials(const ExperimentSpec& spec,
                                            const TargetSource& targets,
                                            std::size_t& size,
                                            const SearchOptions& options) {
  if (!spec.fixture.empty()) {
    const GateConfiguration config = named_fixture(spec.fixture);
    if (config.num_qubits() != spec.n) {
      throw std::invalid_argument("fixture '" + spec.fixture + "' is for " +
                                  std::to_string(config.num_qubits()) + " qubits");
    }
    size = config.size();
    return run_fixed_trials(config, targets, spec.samples, spec.optimizer,
                            *spec.seed, options);
  }
  const auto sizes = spec.sizes();
  if (sizes.size() != 1) {
    throw std::invalid_argument("this command needs a single circuit size");
  }
  size = sizes.front();
  return run_trials(targets, spec.kind, size, spec.samples, spec.optimizer,
                    *spec.seed, options);
}

}  // namespace

std::string_view to_string(Tier tier) { return tier == Tier::Fast ? "fast" : "full"; }

Tier parse_tier(std::string_view text) {
  if (text == "fast") return Tier::Fast;
  if (text == "full") return Tier::Full;
  throw std::invalid_argument("unknown tier '" + std::string(text) + "'");
}

void ExperimentSpec::validate() const {
  const auto fail = [](const std::string& what) {
    throw std::invalid_argument("experiment spec: " + what);
  };
  check_qubit_count(n);
  if (!seed) fail("a master seed is required");
  if (samples == 0) fail("samples must be positive");
  if (workers == 0) fail("workers must be positive");
  if (histogram_bins == 0) fail("histogram_bins must be positive");
  if (size_from && *size_from > size_to) fail("size range is empty");
  if (target == "toffoli" && task != TaskKind::UnitarySynthesis) {
    fail("the toffoli target needs task 'u'");
  }
  if (target == "toffoli" && n < 3) fail("the toffoli target needs n >= 3");
  if (per_trial_targets && target != "haar") fail("per-trial targets must be Haar");
  if (long_running() && tier == Tier::Fast) {
    fail("n=" + std::to_string(n) + " " + std::string(to_string(task)) +
         " is a long-running configuration; pass --tier full");
  }
  optimizer.validate();
}

std::vector<std::size_t> ExperimentSpec::sizes() const {
  if (!size_from && n < 2) return {size_to};
  return size_range(task, kind, n, size_from, size_to);
}

bool ExperimentSpec::long_running() const {
  return (task == TaskKind::UnitarySynthesis && n >= 5) ||
         (task == TaskKind::StatePrep && n >= 7);
}

ExperimentSpec spec_from_json(const json& j) {
  ExperimentSpec s;
  if (j.contains("task")) s.task = parse_task_kind(j["task"].get<std::string>());
  if (j.contains("kind")) s.kind = parse_gate_kind(j["kind"].get<std::string>());
  s.n = j.value("n", s.n);
  if (j.contains("N")) {
    const json& range = j["N"];
    if (range.is_array()) {
      if (range.size() != 2) throw std::invalid_argument("N range must be [from, to]");
      if (!range[0].is_null()) s.size_from = range[0].get<std::size_t>();
      s.size_to = range[1].get<std::size_t>();
    } else {
      s.size_from = s.size_to = range.get<std::size_t>();
    }
  }
  s.samples = j.value("samples", s.samples);
  if (j.contains("seed") && !j["seed"].is_null()) s.seed = j["seed"].get<std::uint64_t>();
  s.target = j.value("target", s.target);
  s.per_trial_targets = j.value("per_trial_targets", s.per_trial_targets);
  s.fixture = j.value("fixture", s.fixture);
  s.histogram_bins = j.value("histogram_bins", s.histogram_bins);
  s.workers = j.value("workers", s.workers);
  if (j.contains("tier")) s.tier = parse_tier(j["tier"].get<std::string>());
  if (j.contains("output")) s.output_dir = j["output"].get<std::string>();
  if (j.contains("optimizer")) {
    const json& o = j["optimizer"];
    OptimizerSettings& os = s.optimizer;
    os.max_iterations = o.value("max_iterations", os.max_iterations);
    os.success_stop = o.value("success_stop", os.success_stop);
    os.stall_window = o.value("stall_window", os.stall_window);
    os.stall_delta = o.value("stall_delta", os.stall_delta);
    os.perfect_threshold = o.value("perfect_threshold", os.perfect_threshold);
    os.restarts = o.value("restarts", os.restarts);
    os.initial_step = o.value("initial_step", os.initial_step);
    os.min_step = o.value("min_step", os.min_step);
    os.max_step = o.value("max_step", os.max_step);
  }
  return s;
}

json spec_to_json(const ExperimentSpec& s) {
  json j = {{"task", std::string(to_string(s.task))},
            {"kind", std::string(to_string(s.kind))},
            {"n", s.n},
            {"samples", s.samples},
            {"target", s.target},
            {"per_trial_targets", s.per_trial_targets},
            {"fixture", s.fixture},
            {"histogram_bins", s.histogram_bins},
            {"workers", s.workers},
            {"tier", std::string(to_string(s.tier))},
            {"output", s.output_dir.string()}};
  if (s.size_from) {
    j["N"] = json::array({*s.size_from, s.size_to});
  } else {
    j["N"] = json::array({nullptr, s.size_to});
  }
  j["seed"] = s.seed ? json(*s.seed) : json(nullptr);
  const OptimizerSettings& o = s.optimizer;
  j["optimizer"] = {{"max_iterations", o.max_iterations},
                    {"success_stop", o.success_stop},
                    {"stall_window", o.stall_window},
                    {"stall_delta", o.stall_delta},
                    {"perfect_threshold", o.perfect_threshold},
                    {"restarts", o.restarts},
                    {"initial_step", o.initial_step},
                    {"min_step", o.min_step},
                    {"max_step", o.max_step}};
  return j;
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256 failed");
  }
  std::ostringstream out;
  for (unsigned int i = 0; i < len; ++i) {
    out << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  }
  return out.str();
}

json RunManifest::to_json() const {
  json outs = json::array();
  for (const auto& o : outputs) outs.push_back({{"path", o.path}, {"sha256", o.sha256}});
  return {{"tool", kToolName},   {"version", kToolVersion}, {"command", command},
          {"spec", spec},        {"started", started},      {"finished", finished},
          {"outputs", outs},     {"timings", timings}};
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

TargetSource resolve_targets(const ExperimentSpec& spec) {
  if (spec.target == "haar") {
    if (spec.per_trial_targets) return TargetSource::per_trial_haar(spec.task, spec.n);
    return TargetSource::shared(
        haar_target(spec.task, spec.n, RngSeed{*spec.seed, kSharedTargetStream}));
  }
  if (spec.target == "toffoli") {
    return TargetSource::shared(Target::unitary(toffoli_target(spec.n)));
  }
  Target target = io::target_from_json(io::read_json_file(spec.target));
  if (target.task() != spec.task || target.num_qubits() != spec.n) {
    throw std::invalid_argument("target file " + spec.target +
                                " does not match the spec's task and qubit count");
  }
  return TargetSource::shared(std::move(target));
}

GateConfiguration named_fixture(const std::string& name) {
  if (name == "toffoli4_cnot15") return toffoli4_cnot15_config();
  throw std::invalid_argument("unknown fixture '" + name + "'");
}

std::vector<BoundsRow> bounds_table(TaskKind task, GateKind kind, int n_from, int n_to) {
  if (n_from < 2 || n_to < n_from || n_to > 30) {
    throw std::invalid_argument("bounds: qubit range must satisfy 2 <= from <= to <= 30");
  }
  std::vector<BoundsRow> rows;
  for (int n = n_from; n <= n_to; ++n) {
    const std::uint64_t lb = lower_bound(task, kind, n);
    rows.push_back({n, lb, config_count(n, lb)});
  }
  return rows;
}

std::string approx_count(const BigInt& count) {
  if (count < 10000000) return count.str();
  return "~1e" + std::to_string(count.str().size() - 1);
}

void write_bounds_csv(std::ostream& out, const std::vector<BoundsRow>& rows) {
  out << "n,N_LB,N_config,N_config_approx\n";
  for (const auto& r : rows) {
    out << r.n << ',' << r.lower_bound << ',' << r.config_count.str() << ','
        << approx_count(r.config_count) << '\n';
  }
}

json bounds_to_json(const std::vector<BoundsRow>& rows) {
  json out = json::array();
  for (const auto& r : rows) {
    out.push_back({{"n", r.n},
                   {"N_LB", r.lower_bound},
                   {"N_config", r.config_count.str()},
                   {"N_config_approx", approx_count(r.config_count)}});
  }
  return out;
}

int cmd_synthesize(const ExperimentSpec& spec, std::ostream& log) {
  spec.validate();
  const TargetSource targets = resolve_targets(spec);
  std::mutex log_mutex;
  std::size_t size = 0;
  const auto trials =
      single_size_trials(spec, targets, size, progress_options(spec, log, log_mutex));

  OutputWriter out(spec, "synthesize");
  out.write("trials.jsonl", jsonl(trials, size));
  out.manifest().timings["wall_time"] = wall_times(trials);

  const auto best = std::max_element(
      trials.begin(), trials.end(), [](const TrialRecord& a, const TrialRecord& b) {
        return a.result.fidelity < b.result.fidelity;
      });
  const bool found = best != trials.end() && !best->error && best->result.perfect;
  json summary = {{"N", size},
                  {"samples", trials.size()},
                  {"found", found},
                  {"best_trial", best != trials.end() ? json(best->trial_index) : json(nullptr)},
                  {"best_fidelity", best != trials.end() ? best->result.fidelity : 0.0}};
  if (found) {
    const ParameterizedCircuit circuit(best->config, best->result.params);
    out.write("best_circuit.json", io::circuit_to_json(circuit).dump(2) + "\n");
    out.write("best_circuit.txt", io::circuit_to_text(circuit));
    out.write("target.json",
              io::target_to_json(targets.for_trial(RngSeed{*spec.seed, best->trial_index}))
                      .dump() + "\n");
  }
  out.write("summary.json", summary.dump(2) + "\n");
  out.finish();
  log << (found ? "perfect circuit found" : "no perfect circuit") << " (best F = "
      << std::setprecision(15) << summary["best_fidelity"].get<double>() << ")\n";
  return found ? kExitOk : kExitNotFound;
}

int cmd_sweep(const ExperimentSpec& spec, std::ostream& log) {
  spec.validate();
  if (!spec.fixture.empty()) throw std::invalid_argument("sweep does not take a fixture");
  const TargetSource targets = resolve_targets(spec);
  std::mutex log_mutex;
  SweepResult result;
  result.task = spec.task;
  result.kind = spec.kind;
  result.n = spec.n;
  OutputWriter out(spec, "sweep");
  std::string records;
  json times = json::object();
  for (std::size_t size : spec.sizes()) {
    log << "N=" << size << '\n';
    auto trials = run_trials(targets, spec.kind, size, spec.samples, spec.optimizer,
                             size_seed(*spec.seed, size),
                             progress_options(spec, log, log_mutex));
    const SweepPoint point = summarize(size, trials);
    log << "N=" << size << " p_num=" << point.p_num << " (" << point.n_perfect << "/"
        << point.n_samples << ")\n";
    records += jsonl(trials, size);
    times[std::to_string(size)] = wall_times(trials);
    for (const auto& r : trials) {
      if (r.error || !r.result.perfect) continue;
      const ParameterizedCircuit circuit(r.config, r.result.params);
      out.write("circuits/N" + std::to_string(size) + "_t" + std::to_string(r.trial_index) +
                    ".json",
                io::circuit_to_json(circuit).dump() + "\n");
    }
    result.points.push_back(point);
    result.trials.push_back(std::move(trials));
  }
  locate_thresholds(result);

  std::ostringstream csv;
  io::write_sweep_csv(csv, result);
  out.write("sweep.csv", csv.str());
  out.write("trials.jsonl", records);
  if (!spec.per_trial_targets) {
    out.write("target.json",
              io::target_to_json(targets.for_trial(RngSeed{*spec.seed, 0})).dump() + "\n");
  }
  const auto opt = [](const std::optional<std::size_t>& v) {
    return v ? json(*v) : json(nullptr);
  };
  const json summary = {{"task", std::string(to_string(spec.task))},
                        {"kind", std::string(to_string(spec.kind))},
                        {"n", spec.n},
                        {"N_min_perfect", opt(result.min_perfect_size)},
                        {"N_th", opt(result.threshold_size)}};
  out.write("summary.json", summary.dump(2) + "\n");
  out.manifest().timings["wall_time"] = times;
  out.finish();
  log << "N_min_perfect=" << summary["N_min_perfect"].dump()
      << " N_th=" << summary["N_th"].dump() << '\n';
  return kExitOk;
}

int cmd_histogram(const ExperimentSpec& spec, std::ostream& log) {
  spec.validate();
  const TargetSource targets = resolve_targets(spec);
  std::mutex log_mutex;
  std::size_t size = 0;
  const auto trials =
      single_size_trials(spec, targets, size, progress_options(spec, log, log_mutex));
  std::vector<double> fids;
  for (const auto& r : trials) {
    if (!r.error) fids.push_back(r.result.fidelity);
  }
  const Histogram h = fidelity_histogram(fids, spec.histogram_bins);

  OutputWriter out(spec, "histogram");
  std::ostringstream csv;
  write_csv(csv, h);
  out.write("histogram.csv", csv.str());
  out.write("trials.jsonl", jsonl(trials, size));
  const double max_f = fids.empty() ? 0.0 : *std::max_element(fids.begin(), fids.end());
  out.write("summary.json", json({{"N", size},
                                  {"samples", trials.size()},
                                  {"max_fidelity", max_f},
                                  {"bins", spec.histogram_bins}})
                                    .dump(2) + "\n");
  out.manifest().timings["wall_time"] = wall_times(trials);
  out.finish();
  log << "max F = " << std::setprecision(15) << max_f << '\n';
  return kExitOk;
}

int cmd_scan(const ExperimentSpec& spec, std::ostream& log) {
  spec.validate();
  if (spec.per_trial_targets) throw std::invalid_argument("scan needs a single target");
  const auto sizes = spec.sizes();
  if (sizes.size() != 1) throw std::invalid_argument("scan needs a single circuit size");
  const Target target = resolve_targets(spec).for_trial(RngSeed{*spec.seed, 0});
  SearchOptions options;
  options.workers = spec.workers;
  const auto start = std::chrono::steady_clock::now();
  const auto entries =
      exhaustive_scan(target, spec.kind, sizes.front(), spec.optimizer, *spec.seed,
                      kDefaultScanCap, options);
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  OutputWriter out(spec, "scan");
  std::string lines;
  double max_f = 0.0;
  for (const auto& e : entries) {
    json placements = json::array();
    for (const auto& p : e.config.placements()) placements.push_back({p.first, p.second});
    lines += json({{"index", e.index},
                   {"placements", placements},
                   {"fidelity", e.result.fidelity},
                   {"perfect", e.result.perfect},
                   {"near_miss", e.result.near_miss}})
                 .dump() + "\n";
    max_f = std::max(max_f, e.result.fidelity);
  }
  out.write("scan.jsonl", lines);
  const double fraction = perfect_fraction(entries);
  out.write("summary.json", json({{"N", sizes.front()},
                                  {"configurations", entries.size()},
                                  {"perfect_fraction", fraction},
                                  {"max_fidelity", max_f}})
                                    .dump(2) + "\n");
  out.manifest().timings["total_seconds"] = elapsed;
  out.finish();
  log << "perfect fraction " << fraction << " over " << entries.size()
      << " configurations\n";
  return fraction > 0.0 ? kExitOk : kExitNotFound;
}

}  // namespace qcsearch
