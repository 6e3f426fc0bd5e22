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

#include "dqc1sim/tomography.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <random>
#include <stdexcept>

#include "dqc1sim/errors.hpp"
#include "dqc1sim/sampling.hpp"

namespace dqc1sim::tomography {
namespace {

constexpr std::array<Eigenstate, 6> kEigenstates = {
    Eigenstate::z_plus, Eigenstate::z_minus, Eigenstate::x_plus,
    Eigenstate::x_minus, Eigenstate::y_plus, Eigenstate::y_minus};

// 0 = Z, 1 = X, 2 = Y.
int axis_of(Eigenstate s) { return static_cast<int>(s) / 2; }

// Bloch components <s|sigma|s> for sigma = I, X, Y, Z.
std::array<double, 4> bloch_row(Eigenstate s) {
  const double sign = static_cast<int>(s) % 2 == 0 ? 1.0 : -1.0;
  switch (axis_of(s)) {
    case 0: return {1.0, 0.0, 0.0, sign};
    case 1: return {1.0, sign, 0.0, 0.0};
    default: return {1.0, 0.0, sign, 0.0};
  }
}

const std::array<Matrix, 4>& pauli_basis() {
  static const std::array<Matrix, 4> basis = {qmath::pauli_i(), qmath::pauli_x(),
                                              qmath::pauli_y(), qmath::pauli_z()};
  return basis;
}

void check_two_qubit(const DensityMatrix& rho) {
  if (rho.dim() != 4) throw std::invalid_argument("tomography needs a two-qubit state");
}

}  // namespace

std::string_view to_string(Eigenstate s) {
  static constexpr std::array<std::string_view, 6> kNames = {"z+", "z-", "x+", "x-", "y+", "y-"};
  return kNames[static_cast<std::size_t>(s)];
}

Eigenstate parse_eigenstate(std::string_view label) {
  for (Eigenstate s : kEigenstates) {
    if (to_string(s) == label) return s;
  }
  throw std::invalid_argument("unknown eigenstate label '" + std::string(label) + "'");
}

Vector state_vector(Eigenstate s) {
  const double h = 1.0 / std::sqrt(2.0);
  Vector v(2);
  switch (s) {
    case Eigenstate::z_plus: v << 1, 0; break;
    case Eigenstate::z_minus: v << 0, 1; break;
    case Eigenstate::x_plus: v << h, h; break;
    case Eigenstate::x_minus: v << h, -h; break;
    case Eigenstate::y_plus: v << h, Complex(0, h); break;
    case Eigenstate::y_minus: v << h, Complex(0, -h); break;
  }
  return v;
}

Matrix TomographySetting::projector() const {
  const Vector va = state_vector(a);
  const Vector vb = state_vector(b);
  return qmath::tensor(Matrix(va * va.adjoint()), Matrix(vb * vb.adjoint()));
}

std::string TomographySetting::label() const {
  return std::string(to_string(a)) + std::string(to_string(b));
}

TomographySetting TomographySetting::parse(std::string_view label) {
  if (label.size() != 4) {
    throw std::invalid_argument("setting label must look like 'x+z-', got '" +
                                std::string(label) + "'");
  }
  return {parse_eigenstate(label.substr(0, 2)), parse_eigenstate(label.substr(2, 2))};
}

std::vector<TomographySetting> all_settings() {
  std::vector<TomographySetting> out;
  for (Eigenstate a : kEigenstates) {
    for (Eigenstate b : kEigenstates) out.push_back({a, b});
  }
  return out;
}

std::vector<TomographySetting> minimal_settings() {
  constexpr std::array<Eigenstate, 4> kFour = {Eigenstate::z_plus, Eigenstate::z_minus,
                                               Eigenstate::x_plus, Eigenstate::y_plus};
  std::vector<TomographySetting> out;
  for (Eigenstate a : kFour) {
    for (Eigenstate b : kFour) out.push_back({a, b});
  }
  return out;
}

TomographyRun expected_counts(const DensityMatrix& rho, double mean_counts,
                              const std::vector<TomographySetting>& settings) {
  check_two_qubit(rho);
  if (!(mean_counts > 0.0)) throw std::invalid_argument("mean_counts must be positive");
  TomographyRun run;
  run.settings = settings;
  run.mean_counts = mean_counts;
  for (const TomographySetting& s : settings) {
    const double p = (rho.entries() * s.projector()).trace().real();
    run.counts.push_back(mean_counts * std::max(p, 0.0));
  }
  return run;
}

TomographyRun simulate_counts(const DensityMatrix& rho, double mean_counts, std::uint64_t seed,
                              const std::vector<TomographySetting>& settings) {
  TomographyRun run = expected_counts(rho, mean_counts, settings);
  run.seed = seed;
  sampling::Rng rng = sampling::make_rng(seed);
  for (double& c : run.counts) {
    c = c > 0.0 ? static_cast<double>(std::poisson_distribution<std::int64_t>(c)(rng)) : 0.0;
  }
  return run;
}

Matrix linear_inversion(const std::vector<TomographySetting>& settings,
                        const std::vector<double>& counts) {
  if (settings.size() != counts.size()) {
    throw std::invalid_argument("settings and counts lengths differ");
  }
  if (settings.empty()) throw std::invalid_argument("no tomography settings");
  for (double c : counts) {
    if (!(c >= 0.0)) throw std::invalid_argument("counts must be non-negative");
  }

  // Totals per basis pair; a group is complete when all four outcomes are
  // present.
  std::map<std::pair<int, int>, std::pair<double, int>> groups;
  for (std::size_t k = 0; k < settings.size(); ++k) {
    auto& g = groups[{axis_of(settings[k].a), axis_of(settings[k].b)}];
    g.first += counts[k];
    g.second += 1;
  }
  double complete_total = 0.0;
  int complete_groups = 0;
  for (const auto& [key, g] : groups) {
    if (g.second != 4) continue;
    if (g.first <= 0.0) {
      throw ReconstructionError("zero total counts in basis pair " +
                                std::string(1, "zxy"[key.first]) +
                                std::string(1, "zxy"[key.second]));
    }
    complete_total += g.first;
    ++complete_groups;
  }
  if (complete_groups == 0) {
    throw ReconstructionError("no complete projector group to normalise counts");
  }
  const double fallback_total = complete_total / complete_groups;

  const auto rows = static_cast<Eigen::Index>(settings.size());
  Eigen::MatrixXd design(rows, 16);
  Eigen::VectorXd freq(rows);
  for (Eigen::Index k = 0; k < rows; ++k) {
    const TomographySetting& s = settings[static_cast<std::size_t>(k)];
    const auto ra = bloch_row(s.a);
    const auto rb = bloch_row(s.b);
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) design(k, 4 * i + j) = ra[static_cast<std::size_t>(i)] * rb[static_cast<std::size_t>(j)] / 4.0;
    }
    const auto& g = groups[{axis_of(s.a), axis_of(s.b)}];
    const double total = g.second == 4 ? g.first : fallback_total;
    freq(k) = counts[static_cast<std::size_t>(k)] / total;
  }
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> solver(design);
  if (solver.rank() < 16) {
    throw ReconstructionError("settings are not informationally complete");
  }
  const Eigen::VectorXd r = solver.solve(freq);

  Matrix rho = Matrix::Zero(4, 4);
  const auto& basis = pauli_basis();
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      rho += r(4 * i + j) / 4.0 * qmath::tensor(basis[static_cast<std::size_t>(i)], basis[static_cast<std::size_t>(j)]);
    }
  }
  return rho / rho.trace().real();
}

Matrix psd_project_matrix(const Matrix& m, double target_trace) {
  if (!qmath::is_hermitian(m, 1e-8)) throw std::invalid_argument("psd_project: input not Hermitian");
  if (!(target_trace > 0.0)) throw std::invalid_argument("psd_project: target trace must be positive");
  const Matrix h = (m + m.adjoint()) / 2.0;
  auto [values, vectors] = qmath::eigh(h);

  // Euclidean projection of the spectrum onto {mu >= 0, sum mu = target}.
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  double cumulative = 0.0;
  double shift = 0.0;
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    cumulative += sorted[k];
    const double candidate = (cumulative - target_trace) / static_cast<double>(k + 1);
    if (sorted[k] - candidate > 0.0) shift = candidate;
  }
  const Eigen::VectorXd projected = (values.array() - shift).cwiseMax(0.0).matrix();
  return vectors * projected.cast<Complex>().asDiagonal() * vectors.adjoint();
}

DensityMatrix psd_project(const Matrix& m, std::vector<int> qubit_dims) {
  Matrix out = psd_project_matrix(m, 1.0);
  out = (out + out.adjoint()) / 2.0;
  return DensityMatrix(std::move(out), std::move(qubit_dims));
}

DensityMatrix reconstruct_subset(const TomographyRun& run) {
  return psd_project(linear_inversion(run.settings, run.counts), {1, 1});
}

DensityMatrix reconstruct(const TomographyRun& run) {
  std::vector<TomographySetting> have = run.settings;
  const auto by_label = [](const TomographySetting& l, const TomographySetting& r) {
    return l.label() < r.label();
  };
  std::sort(have.begin(), have.end(), by_label);
  std::vector<TomographySetting> want = all_settings();
  std::sort(want.begin(), want.end(), by_label);
  if (have != want) {
    throw std::invalid_argument("reconstruct needs each of the 36 product settings exactly once");
  }
  return reconstruct_subset(run);
}

}  // namespace dqc1sim::tomography
