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

#include "qcsearch/io.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace qcsearch::io {
namespace {

json complex_to_json(Complex c) { return json::array({c.real(), c.imag()}); }

Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw std::invalid_argument("expected a [re, im] pair");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace

json state_to_json(const StateVector& state) {
  json out = json::array();
  for (std::size_t i = 0; i < state.dim(); ++i) out.push_back(complex_to_json(state[i]));
  return out;
}

StateVector state_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("state: expected an array");
  Vector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    v[static_cast<Eigen::Index>(i)] = complex_from_json(j[i]);
  }
  return StateVector::from_amplitudes(std::move(v));
}

json unitary_to_json(const UnitaryMatrix& u) {
  json rows = json::array();
  for (std::size_t r = 0; r < u.dim(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < u.dim(); ++c) row.push_back(complex_to_json(u(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

UnitaryMatrix unitary_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("unitary: expected rows");
  const auto d = static_cast<Eigen::Index>(j.size());
  Matrix m(d, d);
  for (Eigen::Index r = 0; r < d; ++r) {
    const json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != d) {
      throw std::invalid_argument("unitary: matrix must be square");
    }
    for (Eigen::Index c = 0; c < d; ++c) {
      m(r, c) = complex_from_json(row[static_cast<std::size_t>(c)]);
    }
  }
  return UnitaryMatrix::from_matrix(std::move(m));
}

json target_to_json(const Target& target) {
  if (target.task() == TaskKind::StatePrep) {
    return {{"kind", "state"}, {"data", state_to_json(target.state())}};
  }
  return {{"kind", "unitary"}, {"data", unitary_to_json(target.unitary())}};
}

Target target_from_json(const json& j) {
  if (j.is_object()) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "state") return Target::state_prep(state_from_json(j.at("data")));
    if (kind == "unitary") return Target::unitary(unitary_from_json(j.at("data")));
    throw std::invalid_argument("target: unknown kind '" + kind + "'");
  }
  if (j.is_array() && !j.empty() && j[0].is_array() && !j[0].empty() &&
      j[0][0].is_array()) {
    return Target::unitary(unitary_from_json(j));
  }
  return Target::state_prep(state_from_json(j));
}

json config_to_json(const GateConfiguration& config) {
  json placements = json::array();
  for (const auto& p : config.placements()) placements.push_back({p.first, p.second});
  return {{"n", config.num_qubits()},
          {"kind", std::string(to_string(config.kind()))},
          {"placements", std::move(placements)}};
}

GateConfiguration config_from_json(const json& j) {
  const int n = j.at("n").get<int>();
  const GateKind kind = parse_gate_kind(j.at("kind").get<std::string>());
  std::vector<EntanglerPlacement> placements;
  for (const auto& p : j.at("placements")) {
    if (!p.is_array() || p.size() != 2) {
      throw std::invalid_argument("placement must be a [i, j] pair");
    }
    placements.push_back(EntanglerPlacement::of(p[0].get<int>(), p[1].get<int>()));
  }
  return GateConfiguration(n, kind, std::move(placements));
}

json circuit_to_json(const ParameterizedCircuit& circuit) {
  json out = config_to_json(circuit.config());
  out["version"] = kCircuitFormatVersion;
  out["angles"] = circuit.params().angles;
  return out;
}

ParameterizedCircuit circuit_from_json(const json& j) {
  const int version = j.value("version", 0);
  if (version != kCircuitFormatVersion) {
    throw std::invalid_argument("unsupported circuit format version " +
                                std::to_string(version));
  }
  return ParameterizedCircuit(config_from_json(j),
                              RotationParams{j.at("angles").get<std::vector<double>>()});
}

std::string circuit_to_text(const ParameterizedCircuit& circuit) {
  const auto& config = circuit.config();
  const auto& angles = circuit.params().angles;
  std::ostringstream out;
  out << "# n=" << config.num_qubits() << " kind=" << to_string(config.kind())
      << " entanglers=" << config.size() << '\n';
  const auto rot = [&](int q, std::size_t offset) {
    out << "rot q" << q << ' ' << format_double(angles[offset]) << ' '
        << format_double(angles[offset + 1]) << ' ' << format_double(angles[offset + 2])
        << '\n';
  };
  for (int q = 0; q < config.num_qubits(); ++q) rot(q, initial_triple_offset(q));
  for (std::size_t e = 0; e < config.size(); ++e) {
    const auto& p = config.placements()[e];
    out << to_string(config.kind()) << " q" << p.first << " q" << p.second << '\n';
    rot(p.first, entangler_triple_offset(config.num_qubits(), e, 0));
    rot(p.second, entangler_triple_offset(config.num_qubits(), e, 1));
  }
  return out.str();
}

json trial_to_json(const TrialRecord& record, std::size_t circuit_size) {
  json placements = json::array();
  for (const auto& p : record.config.placements()) placements.push_back({p.first, p.second});
  json out = {{"trial", record.trial_index},
              {"N", circuit_size},
              {"placements", std::move(placements)},
              {"fidelity", record.result.fidelity},
              {"infidelity", 1.0 - record.result.fidelity},
              {"iterations", record.result.iterations},
              {"restarts_run", record.result.restarts_run},
              {"termination", std::string(to_string(record.result.termination))},
              {"perfect", record.result.perfect},
              {"near_miss", record.result.near_miss}};
  if (record.error) out["error"] = *record.error;
  return out;
}

void write_sweep_csv(std::ostream& out, const SweepResult& result) {
  out << "N,n_samples,n_perfect,p_num,err_lo,err_hi\n";
  for (const auto& p : result.points) {
    out << p.circuit_size << ',' << p.n_samples << ',' << p.n_perfect << ','
        << format_double(p.p_num) << ',' << format_double(p.err_lo) << ','
        << format_double(p.err_hi) << '\n';
  }
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

std::string format_double(double value) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

}  // namespace qcsearch::io
