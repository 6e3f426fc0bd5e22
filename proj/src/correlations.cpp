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

#include "dqc1sim/correlations.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dqc1sim/errors.hpp"

namespace dqc1sim::correlations {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kMinOutcomeProbability = 1e-14;

struct Split {
  Eigen::Index dim_a;
  Eigen::Index dim_b;
};

Split bipartition(const DensityMatrix& rho) {
  if (rho.qubit_dims().size() != 2) {
    throw std::invalid_argument("correlation measures need a bipartite state (2 subsystems), got " +
                                std::to_string(rho.qubit_dims().size()));
  }
  return {Eigen::Index{1} << rho.qubit_dims()[0], Eigen::Index{1} << rho.qubit_dims()[1]};
}

// Tr_measured[(|psi><psi| (x) I) rho (|psi><psi| (x) I)] without normalisation.
Matrix project_and_reduce(const Matrix& rho, Split split, std::size_t measured,
                          const Vector& psi) {
  const auto [da, db] = split;
  if (measured == 0) {
    Matrix out = Matrix::Zero(db, db);
    for (Eigen::Index a = 0; a < da; ++a) {
      for (Eigen::Index b = 0; b < da; ++b) {
        const Complex w = std::conj(psi(a)) * psi(b);
        if (w == Complex(0.0)) continue;
        out.noalias() += w * rho.block(a * db, b * db, db, db);
      }
    }
    return out;
  }
  Matrix out = Matrix::Zero(da, da);
  for (Eigen::Index i = 0; i < da; ++i) {
    for (Eigen::Index j = 0; j < da; ++j) {
      out(i, j) = (psi.adjoint() * rho.block(i * db, j * db, db, db) * psi)(0, 0);
    }
  }
  return out;
}

// sum_k p_k H(rho_k / p_k) over the rank-1 outcomes `states`.
double average_entropy(const Matrix& rho, Split split, std::size_t measured,
                       const std::vector<Vector>& states) {
  double total = 0.0;
  for (const Vector& psi : states) {
    Matrix m = project_and_reduce(rho, split, measured, psi);
    const double p = m.trace().real();
    if (p < kMinOutcomeProbability) continue;
    m /= p;
    total += p * qmath::vn_entropy_unchecked(m);
  }
  return total;
}

double conditional_entropy_at(const Matrix& rho, Split split, std::size_t measured,
                              double polar, double azimuth) {
  const BlochDirection d{polar, azimuth};
  return average_entropy(rho, split, measured, {d.plus_state(), d.minus_state()});
}

void check_single_qubit(const DensityMatrix& rho, std::size_t measured) {
  if (measured > 1) throw std::invalid_argument("measured subsystem index must be 0 or 1");
  if (rho.qubit_dims()[measured] != 1) {
    throw UnsupportedError("projective discord optimisation supports a one-qubit measured "
                           "subsystem only (got " +
                           std::to_string(rho.qubit_dims()[measured]) + " qubits)");
  }
}

struct Vertex {
  double polar;
  double azimuth;
  double value;
};

// Nelder-Mead on the unconstrained (polar, azimuth) plane; the objective is
// periodic so no bounds are needed.
template <typename Objective>
Vertex nelder_mead(Objective&& f, Vertex start, double step_polar, double step_azimuth,
                   double tolerance, int max_iterations, int& evaluations) {
  std::array<Vertex, 3> s{start, Vertex{start.polar + step_polar, start.azimuth, 0.0},
                          Vertex{start.polar, start.azimuth + step_azimuth, 0.0}};
  for (int k = 1; k < 3; ++k) {
    s[k].value = f(s[k].polar, s[k].azimuth);
    ++evaluations;
  }
  auto eval = [&](double p, double a) {
    ++evaluations;
    return Vertex{p, a, f(p, a)};
  };
  for (int it = 0; it < max_iterations; ++it) {
    std::sort(s.begin(), s.end(), [](const Vertex& l, const Vertex& r) { return l.value < r.value; });
    if (s[2].value - s[0].value <= tolerance) break;
    const double cp = (s[0].polar + s[1].polar) / 2.0;
    const double ca = (s[0].azimuth + s[1].azimuth) / 2.0;
    const Vertex reflected = eval(2.0 * cp - s[2].polar, 2.0 * ca - s[2].azimuth);
    if (reflected.value < s[0].value) {
      const Vertex expanded = eval(3.0 * cp - 2.0 * s[2].polar, 3.0 * ca - 2.0 * s[2].azimuth);
      s[2] = expanded.value < reflected.value ? expanded : reflected;
    } else if (reflected.value < s[1].value) {
      s[2] = reflected;
    } else {
      const bool outside = reflected.value < s[2].value;
      const Vertex& ref = outside ? reflected : s[2];
      const Vertex contracted = eval((cp + ref.polar) / 2.0, (ca + ref.azimuth) / 2.0);
      if (contracted.value < ref.value) {
        s[2] = contracted;
      } else {
        for (int k = 1; k < 3; ++k) {
          s[k] = eval((s[0].polar + s[k].polar) / 2.0, (s[0].azimuth + s[k].azimuth) / 2.0);
        }
      }
    }
  }
  return *std::min_element(s.begin(), s.end(),
                           [](const Vertex& l, const Vertex& r) { return l.value < r.value; });
}

// Product eigenvectors of the Pauli operators selected by `choice` (base 3
// digits, 0 = Z, 1 = X, 2 = Y), one per qubit with qubit 0 slowest.
std::vector<Vector> pauli_product_basis(int qubits, int choice) {
  const double h = 1.0 / std::sqrt(2.0);
  const std::array<std::array<Vector, 2>, 3> single = [h] {
    std::array<std::array<Vector, 2>, 3> out;
    out[0][0] = Vector::Unit(2, 0);
    out[0][1] = Vector::Unit(2, 1);
    out[1][0] = Vector(2);
    out[1][0] << h, h;
    out[1][1] = Vector(2);
    out[1][1] << h, -h;
    out[2][0] = Vector(2);
    out[2][0] << h, Complex(0, h);
    out[2][1] = Vector(2);
    out[2][1] << h, Complex(0, -h);
    return out;
  }();
  std::vector<int> axes(static_cast<std::size_t>(qubits));
  for (int q = qubits - 1; q >= 0; --q) {
    axes[static_cast<std::size_t>(q)] = choice % 3;
    choice /= 3;
  }
  std::vector<Vector> basis;
  const int outcomes = 1 << qubits;
  for (int o = 0; o < outcomes; ++o) {
    Matrix v = Matrix::Ones(1, 1);
    for (int q = 0; q < qubits; ++q) {
      const int bit = (o >> (qubits - 1 - q)) & 1;
      v = qmath::tensor(v, Matrix(single[static_cast<std::size_t>(axes[static_cast<std::size_t>(q)])]
                                        [static_cast<std::size_t>(bit)]));
    }
    basis.emplace_back(v.col(0));
  }
  return basis;
}

}  // namespace

std::array<double, 3> BlochDirection::unit() const {
  return {std::sin(polar) * std::cos(azimuth), std::sin(polar) * std::sin(azimuth),
          std::cos(polar)};
}

Vector BlochDirection::plus_state() const {
  Vector v(2);
  v << std::cos(polar / 2.0), std::sin(polar / 2.0) * std::exp(Complex(0.0, azimuth));
  return v;
}

Vector BlochDirection::minus_state() const {
  Vector v(2);
  v << std::sin(polar / 2.0), -std::cos(polar / 2.0) * std::exp(Complex(0.0, azimuth));
  return v;
}

BlochDirection BlochDirection::canonical(double polar, double azimuth) {
  const BlochDirection raw{polar, azimuth};
  const auto [x, y, z] = raw.unit();
  BlochDirection out;
  out.polar = std::acos(std::clamp(z, -1.0, 1.0));
  if (std::hypot(x, y) < 1e-15) return out;
  double a = std::atan2(y, x);
  if (a < 0.0) a += 2.0 * kPi;
  if (a >= 2.0 * kPi) a = 0.0;
  out.azimuth = a;
  return out;
}

std::size_t subsystem_index(MeasuredSide side) { return side == MeasuredSide::control ? 0 : 1; }

const char* to_string(MeasuredSide side) {
  return side == MeasuredSide::control ? "measure_control" : "measure_register";
}

double mutual_information(const DensityMatrix& rho) {
  bipartition(rho);
  return qmath::vn_entropy(qmath::partial_trace(rho, 0)) +
         qmath::vn_entropy(qmath::partial_trace(rho, 1)) - qmath::vn_entropy(rho);
}

double conditional_entropy(const DensityMatrix& rho, std::size_t measured,
                           const BlochDirection& direction) {
  const Split split = bipartition(rho);
  check_single_qubit(rho, measured);
  return conditional_entropy_at(rho.entries(), split, measured, direction.polar,
                                direction.azimuth);
}

ConditionalEntropy min_conditional_entropy(const DensityMatrix& rho, std::size_t measured,
                                           const OptimizerOptions& options) {
  const Split split = bipartition(rho);
  check_single_qubit(rho, measured);
  if (options.polar_steps < 2 || options.azimuth_steps < 2 || options.refine_starts < 1) {
    throw std::invalid_argument("optimizer grid too small");
  }
  const Matrix& m = rho.entries();
  auto objective = [&](double p, double a) { return conditional_entropy_at(m, split, measured, p, a); };

  // Polar spans [0, pi) since n and -n give the same measurement.
  const double dp = kPi / options.polar_steps;
  const double da = 2.0 * kPi / options.azimuth_steps;
  std::vector<Vertex> grid;
  grid.reserve(static_cast<std::size_t>(options.polar_steps * options.azimuth_steps));
  int evaluations = 0;
  for (int i = 0; i < options.polar_steps; ++i) {
    const double p = i * dp;
    // At the pole every azimuth is the same measurement.
    const int azimuths = i == 0 ? 1 : options.azimuth_steps;
    for (int j = 0; j < azimuths; ++j) {
      const double a = j * da;
      grid.push_back({p, a, objective(p, a)});
      ++evaluations;
    }
  }
  const auto starts = std::min<std::size_t>(static_cast<std::size_t>(options.refine_starts),
                                            grid.size());
  std::partial_sort(grid.begin(), grid.begin() + static_cast<std::ptrdiff_t>(starts), grid.end(),
                    [](const Vertex& l, const Vertex& r) { return l.value < r.value; });

  Vertex best = grid.front();
  for (std::size_t k = 0; k < starts; ++k) {
    Vertex v = nelder_mead(objective, grid[k], dp, da, options.tolerance, options.max_iterations,
                           evaluations);
    // Restart from the converged point with a smaller simplex; stop once a
    // restart no longer improves by more than the tolerance.
    double step = 0.25;
    for (int restart = 0; restart < 4; ++restart) {
      const Vertex again = nelder_mead(objective, v, dp * step, da * step, options.tolerance,
                                       options.max_iterations, evaluations);
      const bool improved = again.value < v.value - options.tolerance;
      if (again.value < v.value) v = again;
      if (!improved) break;
      step *= 0.25;
    }
    if (v.value < best.value) best = v;
  }
  return {best.value, BlochDirection::canonical(best.polar, best.azimuth), evaluations};
}

DiscordResult discord_detail(const DensityMatrix& rho, MeasuredSide side,
                             const OptimizerOptions& options) {
  bipartition(rho);
  const std::size_t measured = subsystem_index(side);
  DiscordResult out;
  out.measurement = min_conditional_entropy(rho, measured, options);
  const double h_measured = qmath::vn_entropy(qmath::partial_trace(rho, measured));
  const double h_unmeasured = qmath::vn_entropy(qmath::partial_trace(rho, 1 - measured));
  const double h_joint = qmath::vn_entropy(rho);
  out.mutual_info = h_measured + h_unmeasured - h_joint;
  // I - J with J = H(unmeasured) - min conditional entropy.
  out.discord = h_measured - h_joint + out.measurement.bits;
  return out;
}

double discord(const DensityMatrix& rho, MeasuredSide side) {
  return discord_detail(rho, side).discord;
}

double pauli_product_discord_bound(const DensityMatrix& rho, MeasuredSide side) {
  const Split split = bipartition(rho);
  const std::size_t measured = subsystem_index(side);
  const int qubits = rho.qubit_dims()[measured];
  int choices = 1;
  for (int q = 0; q < qubits; ++q) choices *= 3;
  double best = std::numeric_limits<double>::infinity();
  for (int c = 0; c < choices; ++c) {
    best = std::min(best, average_entropy(rho.entries(), split, measured,
                                          pauli_product_basis(qubits, c)));
  }
  const double h_measured = qmath::vn_entropy(qmath::partial_trace(rho, measured));
  return h_measured - qmath::vn_entropy(rho) + best;
}

double concurrence(const DensityMatrix& rho) {
  if (rho.dim() != 4) {
    throw std::invalid_argument("concurrence needs a two-qubit state, got dimension " +
                                std::to_string(rho.dim()));
  }
  const Matrix yy = qmath::tensor(qmath::pauli_y(), qmath::pauli_y());
  const Matrix flipped = yy * rho.entries().conjugate() * yy;
  const Matrix root = qmath::sqrt_psd(rho.entries());
  Matrix inner = root * flipped * root;
  inner = (inner + inner.adjoint()) / 2.0;
  // Eigenvalues of rho * flipped equal those of the Hermitian form; tiny
  // negative round-off is clamped before the square root.
  Eigen::SelfAdjointEigenSolver<Matrix> solver(inner, Eigen::EigenvaluesOnly);
  Eigen::VectorXd lambda = solver.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  std::sort(lambda.data(), lambda.data() + lambda.size(), std::greater<>());
  return std::max(0.0, lambda(0) - lambda(1) - lambda(2) - lambda(3));
}

double tangle(const DensityMatrix& rho) {
  const double c = concurrence(rho);
  return c * c;
}

CorrelationReport analyze(const DensityMatrix& rho, const OptimizerOptions& options) {
  bipartition(rho);
  CorrelationReport report;
  const DiscordResult rc = discord_detail(rho, MeasuredSide::control, options);
  report.mutual_info = rc.mutual_info;
  report.discord_rc = rc.discord;
  report.argmin_direction = rc.measurement.direction;
  report.optimizer_evals = rc.measurement.evaluations;
  if (rho.qubit_dims()[1] == 1) {
    const DiscordResult cr = discord_detail(rho, MeasuredSide::register_, options);
    report.discord_cr = cr.discord;
    report.argmin_direction_cr = cr.measurement.direction;
    report.optimizer_evals += cr.measurement.evaluations;
    report.tangle = tangle(rho);
  } else {
    report.discord_cr = pauli_product_discord_bound(rho, MeasuredSide::register_);
    report.discord_cr_method = "pauli_product_bound";
  }
  return report;
}

}  // namespace dqc1sim::correlations
