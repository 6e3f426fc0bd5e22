// Copyright 2026 The dqc1sim Authors
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

#include "dqc1sim/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "dqc1sim/errors.hpp"

namespace dqc1sim::io {
namespace {

constexpr double kLoadUnitaryTol = 1e-8;

const Json& require(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(where + ": missing field \"" + key + "\"");
  }
  return j.at(key);
}

Eigen::MatrixXd real_rows(const Json& rows, Eigen::Index dim, const char* key) {
  if (!rows.is_array() || static_cast<Eigen::Index>(rows.size()) != dim) {
    throw ParseError(std::string("matrix: \"") + key + "\" must have " + std::to_string(dim) +
                     " rows");
  }
  Eigen::MatrixXd out(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    const Json& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != dim) {
      throw ParseError(std::string("matrix: row ") + std::to_string(i) + " of \"" + key +
                       "\" must have " + std::to_string(dim) + " entries");
    }
    for (Eigen::Index k = 0; k < dim; ++k) {
      const Json& v = row[static_cast<std::size_t>(k)];
      if (!v.is_number()) {
        throw ParseError(std::string("matrix: non-numeric entry in \"") + key + "\" at [" +
                         std::to_string(i) + "][" + std::to_string(k) + "]");
      }
      out(i, k) = v.get<double>();
    }
  }
  return out;
}

clifford::GateKind parse_kind(const std::string& name, std::size_t index) {
  using clifford::GateKind;
  if (name == "H") return GateKind::H;
  if (name == "S") return GateKind::S;
  if (name == "CZ") return GateKind::CZ;
  if (name == "CNOT" || name == "CX") return GateKind::CNOT;
  if (name == "X") return GateKind::X;
  if (name == "Z") return GateKind::Z;
  throw ParseError("gate " + std::to_string(index) + ": unknown gate \"" + name + "\"");
}

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Json matrix_to_json(const Matrix& m) {
  Json re = Json::array();
  Json im = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json rr = Json::array();
    Json ir = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) {
      rr.push_back(m(i, k).real());
      ir.push_back(m(i, k).imag());
    }
    re.push_back(std::move(rr));
    im.push_back(std::move(ir));
  }
  Json j;
  j["dim"] = m.rows();
  j["re"] = std::move(re);
  j["im"] = std::move(im);
  return j;
}

Matrix matrix_from_json(const Json& j) {
  const Json& dim_field = require(j, "dim", "matrix");
  if (!dim_field.is_number_integer() || dim_field.get<long long>() < 1) {
    throw ParseError("matrix: \"dim\" must be a positive integer");
  }
  const auto dim = static_cast<Eigen::Index>(dim_field.get<long long>());
  const Eigen::MatrixXd re = real_rows(require(j, "re", "matrix"), dim, "re");
  const Eigen::MatrixXd im = j.contains("im") ? real_rows(j.at("im"), dim, "im")
                                              : Eigen::MatrixXd::Zero(dim, dim);
  Matrix out(dim, dim);
  out.real() = re;
  out.imag() = im;
  return out;
}

Json state_to_json(const qmath::DensityMatrix& rho) {
  Json j = matrix_to_json(rho.entries());
  j["qubit_dims"] = rho.qubit_dims();
  return j;
}

qmath::DensityMatrix state_from_json(const Json& j) {
  Matrix m = matrix_from_json(j);
  std::vector<int> dims;
  if (j.contains("qubit_dims")) {
    try {
      dims = j.at("qubit_dims").get<std::vector<int>>();
    } catch (const nlohmann::json::exception&) {
      throw ParseError("state: \"qubit_dims\" must be a list of integers");
    }
  }
  return qmath::DensityMatrix(std::move(m), std::move(dims));
}

dqc1::Unitary unitary_from_json(const Json& j) {
  return dqc1::Unitary(matrix_from_json(j), kLoadUnitaryTol);
}

clifford::CliffordCircuit circuit_from_json(const Json& j) {
  const Json& n = require(j, "n", "circuit");
  if (!n.is_number_integer() || n.get<int>() < 1) {
    throw ParseError("circuit: \"n\" must be a positive integer");
  }
  clifford::CliffordCircuit c(n.get<int>());
  const Json& gates = require(j, "gates", "circuit");
  if (!gates.is_array()) throw ParseError("circuit: \"gates\" must be an array");
  for (std::size_t k = 0; k < gates.size(); ++k) {
    const std::string where = "gate " + std::to_string(k);
    const Json& g = gates[k];
    const Json& name = require(g, "g", where);
    const Json& q = require(g, "q", where);
    if (!name.is_string()) throw ParseError(where + ": \"g\" must be a string");
    const clifford::GateKind kind = parse_kind(name.get<std::string>(), k);
    clifford::Gate gate{kind};
    if (clifford::is_two_qubit(kind)) {
      if (!q.is_array() || q.size() != 2 || !q[0].is_number_integer() ||
          !q[1].is_number_integer()) {
        throw ParseError(where + ": \"q\" must be a pair of qubit indices");
      }
      gate.q0 = q[0].get<int>();
      gate.q1 = q[1].get<int>();
    } else {
      if (!q.is_number_integer()) throw ParseError(where + ": \"q\" must be a qubit index");
      gate.q0 = q.get<int>();
    }
    try {
      c.add(gate);
    } catch (const std::invalid_argument& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  return c;
}

Json circuit_to_json(const clifford::CliffordCircuit& c) {
  Json gates = Json::array();
  for (const clifford::Gate& g : c.gates()) {
    Json e;
    e["g"] = clifford::to_string(g.kind);
    if (clifford::is_two_qubit(g.kind)) {
      e["q"] = {g.q0, g.q1};
    } else {
      e["q"] = g.q0;
    }
    gates.push_back(std::move(e));
  }
  Json j;
  j["n"] = c.num_qubits();
  j["gates"] = std::move(gates);
  return j;
}

Json direction_to_json(const correlations::BlochDirection& d) {
  const auto u = d.unit();
  Json j;
  j["polar"] = d.polar;
  j["azimuth"] = d.azimuth;
  j["unit"] = {u[0], u[1], u[2]};
  return j;
}

Json report_to_json(const correlations::CorrelationReport& r) {
  Json j;
  j["mutual_info"] = r.mutual_info;
  j["discord_rc"] = r.discord_rc;
  j["discord_cr"] = r.discord_cr;
  j["discord_cr_method"] = r.discord_cr_method;
  j["tangle"] = r.tangle ? Json(*r.tangle) : Json(nullptr);
  j["argmin_direction"] = direction_to_json(r.argmin_direction);
  j["argmin_direction_cr"] =
      r.argmin_direction_cr ? direction_to_json(*r.argmin_direction_cr) : Json(nullptr);
  j["optimizer_evals"] = r.optimizer_evals;
  return j;
}

Json zero_discord_to_json(const clifford::ZeroDiscordReport& r) {
  Json rotations = Json::array();
  for (const clifford::LocalRotation& rot : r.rotations) {
    Json gates = Json::array();
    for (clifford::GateKind k : rot.gates) gates.push_back(clifford::to_string(k));
    Json e;
    e["qubit"] = rot.qubit;
    e["from"] = std::string(1, clifford::to_char(rot.from));
    e["to"] = std::string(1, clifford::to_char(rot.to));
    e["gates"] = std::move(gates);
    rotations.push_back(std::move(e));
  }
  Json j;
  j["propagated"] = r.propagated.to_string();
  j["local_rotations"] = std::move(rotations);
  j["diagonal_form"] = r.diagonal_form.to_string();
  j["structurally_diagonal"] = r.structurally_diagonal;
  if (r.dense) {
    Json d;
    d["discord_rc"] = r.dense->discord_rc;
    d["discord_cr"] = r.dense->discord_cr;
    d["discord_cr_method"] = r.dense->discord_cr_method;
    d["propagation_matches_dense"] = r.dense->propagation_matches_dense;
    d["tolerance"] = clifford::kZeroDiscordTol;
    j["dense_check"] = std::move(d);
  } else {
    j["dense_check"] = nullptr;
  }
  j["verified"] = r.verified;
  return j;
}

Json run_to_json(const tomography::TomographyRun& run) {
  Json settings = Json::array();
  for (const auto& s : run.settings) settings.push_back(s.label());
  Json counts = Json::array();
  for (double c : run.counts) {
    if (c == std::floor(c) && std::abs(c) < 9e15) {
      counts.push_back(static_cast<long long>(c));
    } else {
      counts.push_back(c);
    }
  }
  Json j;
  j["settings"] = std::move(settings);
  j["counts"] = std::move(counts);
  j["mean"] = run.mean_counts;
  j["seed"] = run.seed;
  return j;
}

tomography::TomographyRun run_from_json(const Json& j) {
  tomography::TomographyRun run;
  const Json& settings = require(j, "settings", "tomography run");
  const Json& counts = require(j, "counts", "tomography run");
  if (!settings.is_array() || !counts.is_array() || settings.size() != counts.size()) {
    throw ParseError("tomography run: \"settings\" and \"counts\" must be arrays of equal length");
  }
  for (std::size_t k = 0; k < settings.size(); ++k) {
    if (!settings[k].is_string() || !counts[k].is_number()) {
      throw ParseError("tomography run: bad entry at index " + std::to_string(k));
    }
    try {
      run.settings.push_back(tomography::TomographySetting::parse(settings[k].get<std::string>()));
    } catch (const std::invalid_argument& e) {
      throw ParseError("tomography run: " + std::string(e.what()));
    }
    run.counts.push_back(counts[k].get<double>());
  }
  if (j.contains("mean")) run.mean_counts = j.at("mean").get<double>();
  if (j.contains("seed")) run.seed = j.at("seed").get<std::uint64_t>();
  return run;
}

Json chi2_to_json(const sampling::Chi2Report& r) {
  Json j;
  j["chi2_reduced"] = r.chi2_reduced;
  j["dof"] = r.dof;
  j["n_points"] = r.n_points;
  return j;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace dqc1sim::io
