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

#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <stdexcept>

#include <gtest/gtest.h>

#include "dqc1sim/correlations.hpp"
#include "dqc1sim/dqc1.hpp"
#include "dqc1sim/errors.hpp"
#include "test_support.hpp"

namespace dqc1sim::tomography {
namespace {

using namespace dqc1sim::testing;

constexpr double kPi = std::numbers::pi;

// Single-qubit eigenstates written out by hand, indexed like Eigenstate.
Vector oracle_ket(Eigenstate s) {
  const double h = 1.0 / std::sqrt(2.0);
  const Complex i(0.0, 1.0);
  Vector v(2);
  switch (s) {
    case Eigenstate::z_plus: v << 1.0, 0.0; break;
    case Eigenstate::z_minus: v << 0.0, 1.0; break;
    case Eigenstate::x_plus: v << h, h; break;
    case Eigenstate::x_minus: v << h, -h; break;
    case Eigenstate::y_plus: v << h, i * h; break;
    case Eigenstate::y_minus: v << h, -i * h; break;
  }
  return v;
}

double oracle_probability(const Matrix& rho, const TomographySetting& s) {
  Vector ket(4);
  const Vector a = oracle_ket(s.a);
  const Vector b = oracle_ket(s.b);
  for (int i = 0; i < 2; ++i) {
    for (int k = 0; k < 2; ++k) ket(2 * i + k) = a(i) * b(k);
  }
  return (ket.adjoint() * rho * ket)(0, 0).real();
}

TomographyRun noiseless(const Matrix& rho, double mean, const std::vector<TomographySetting>& settings) {
  TomographyRun run;
  run.settings = settings;
  run.mean_counts = mean;
  for (const TomographySetting& s : settings) run.counts.push_back(mean * oracle_probability(rho, s));
  return run;
}

qmath::DensityMatrix rho_cr(double theta) { return dqc1::output_state(dqc1::z_theta(theta), 1.0); }

TEST(Settings, EnumerateFullProductSet) {
  const auto all = all_settings();
  ASSERT_EQ(all.size(), 36u);
  std::set<std::string> labels;
  for (const TomographySetting& s : all) {
    labels.insert(s.label());
    const Matrix p = s.projector();
    EXPECT_LT(max_abs_diff(p * p, p), 1e-12);
    EXPECT_NEAR(p.trace().real(), 1.0, 1e-12);
    EXPECT_EQ(TomographySetting::parse(s.label()), s);
  }
  EXPECT_EQ(labels.size(), 36u);
  EXPECT_EQ(all.front().label(), "z+z+");
  EXPECT_EQ(all[1].label(), "z+z-");
  EXPECT_EQ(all.back().label(), "y-y-");
  EXPECT_EQ(minimal_settings().size(), 16u);
  EXPECT_THROW(parse_eigenstate("w+"), std::invalid_argument);
}

TEST(Settings, EigenstatesMatchPauliEigenvectors) {
  const Matrix paulis[] = {qmath::pauli_z(), qmath::pauli_x(), qmath::pauli_y()};
  for (int k = 0; k < 6; ++k) {
    const auto s = static_cast<Eigenstate>(k);
    const Vector v = state_vector(s);
    const double sign = k % 2 == 0 ? 1.0 : -1.0;
    EXPECT_LT((paulis[k / 2] * v - sign * v).norm(), 1e-15);
    EXPECT_LT((v - oracle_ket(s)).norm(), 1e-15);
    EXPECT_EQ(parse_eigenstate(to_string(s)), s);
  }
}

TEST(SimulateCounts, ProductStateMeans) {
  const qmath::DensityMatrix zero = qmath::DensityMatrix::from_pure(basis_ket(0), {1, 1});
  const TomographyRun e = expected_counts(zero, 500.0);
  EXPECT_DOUBLE_EQ(e.counts[0], 500.0);
  EXPECT_NEAR(e.counts[7], 0.0, 1e-12);  // z- z-
  const TomographyRun mixed = expected_counts(qmath::DensityMatrix::maximally_mixed(2), 400.0);
  for (double c : mixed.counts) EXPECT_NEAR(c, 100.0, 1e-12);
}

TEST(SimulateCounts, PoissonMeanMatchesDirectTrace) {
  const qmath::DensityMatrix rho = rho_cr(kPi / 2);
  const TomographySetting xz{Eigenstate::x_plus, Eigenstate::z_plus};
  const double want = 1000.0 * oracle_probability(rho.entries(), xz);
  EXPECT_NEAR(expected_counts(rho, 1000.0, {xz}).counts[0], want, 1e-9);
  double sum = 0.0;
  constexpr int kSeeds = 2000;
  for (int s = 0; s < kSeeds; ++s) {
    const TomographyRun run = simulate_counts(rho, 1000.0, static_cast<std::uint64_t>(s), {xz});
    EXPECT_EQ(run.counts[0], std::floor(run.counts[0]));
    sum += run.counts[0];
  }
  EXPECT_NEAR(sum / kSeeds, want, 3.0 * std::sqrt(want / kSeeds));
}

TEST(SimulateCounts, ReproduciblePerSeed) {
  const qmath::DensityMatrix rho = rho_cr(1.0);
  const TomographyRun a = simulate_counts(rho, 100.0, 42);
  const TomographyRun b = simulate_counts(rho, 100.0, 42);
  EXPECT_EQ(a.counts, b.counts);
  EXPECT_EQ(a.seed, 42u);
  EXPECT_NE(a.counts, simulate_counts(rho, 100.0, 43).counts);
  EXPECT_THROW(simulate_counts(rho, 0.0, 1), std::invalid_argument);
}

TEST(Reconstruct, NoiselessIsExactForRandomStates) {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 50; ++trial) {
    Matrix target = random_state_entries(4, rng);
    if (trial % 5 == 0) {
      const Vector psi = random_pure(4, rng);
      target = ket_bra(psi, psi);
    }
    const TomographyRun full = noiseless(target, 1e4, all_settings());
    EXPECT_LT(max_abs_diff(linear_inversion(full.settings, full.counts), target), 1e-10);
    EXPECT_LT(max_abs_diff(reconstruct(full).entries(), target), 1e-10);
    const TomographyRun minimal = noiseless(target, 1e4, minimal_settings());
    EXPECT_LT(max_abs_diff(linear_inversion(minimal.settings, minimal.counts), target), 1e-10);
  }
}

TEST(Reconstruct, BellStateFidelity) {
  const qmath::DensityMatrix bell = qmath::DensityMatrix::from_pure(bell_phi_plus(), {1, 1});
  int good = 0;
  for (int s = 0; s < 100; ++s) {
    const qmath::DensityMatrix rec = reconstruct(simulate_counts(bell, 1e4, static_cast<std::uint64_t>(s)));
    if (qmath::fidelity(rec, bell) >= 0.99) ++good;
  }
  EXPECT_GE(good, 95);
}

TEST(Reconstruct, DqcOneOutputCorrelations) {
  const qmath::DensityMatrix rho = rho_cr(kPi / 2);
  const double exact_rc = correlations::discord(rho, correlations::MeasuredSide::control);
  const double exact_cr = correlations::discord(rho, correlations::MeasuredSide::register_);
  int good = 0;
  for (int s = 0; s < 100; ++s) {
    const qmath::DensityMatrix rec = reconstruct(simulate_counts(rho, 1e4, static_cast<std::uint64_t>(s)));
    const bool ok = correlations::tangle(rec) <= 0.02 &&
                    std::abs(correlations::discord(rec, correlations::MeasuredSide::control) - exact_rc) <= 0.05 &&
                    std::abs(correlations::discord(rec, correlations::MeasuredSide::register_) - exact_cr) <= 0.05;
    if (ok) ++good;
  }
  EXPECT_GE(good, 90);
}

TEST(Reconstruct, ErrorScalesAsInverseRootCounts) {
  std::mt19937_64 rng(11);
  const Matrix mixed = 0.5 * random_state_entries(4, rng) + 0.5 * qmath::identity(4) / 4.0;
  const qmath::DensityMatrix rho(mixed, {1, 1});
  const auto mean_error = [&](double mean) {
    double sum = 0.0;
    for (int s = 0; s < 200; ++s) {
      sum += qmath::trace_distance(reconstruct(simulate_counts(rho, mean, static_cast<std::uint64_t>(s))), rho);
    }
    return sum / 200.0;
  };
  const double e3 = mean_error(1e3);
  const double e4 = mean_error(1e4);
  const double e5 = mean_error(1e5);
  const double root10 = std::sqrt(10.0);
  EXPECT_NEAR(e3 / e4, root10, 0.3 * root10);
  EXPECT_NEAR(e4 / e5, root10, 0.3 * root10);
}

TEST(Reconstruct, OverCompleteSetHasLowerError) {
  const qmath::DensityMatrix rho = rho_cr(kPi / 3);
  double full = 0.0;
  double minimal = 0.0;
  for (int s = 0; s < 200; ++s) {
    const auto seed = static_cast<std::uint64_t>(s);
    full += qmath::trace_distance(reconstruct(simulate_counts(rho, 1e3, seed)), rho);
    minimal += qmath::trace_distance(reconstruct_subset(simulate_counts(rho, 1e3, seed, minimal_settings())), rho);
  }
  EXPECT_LT(full, minimal);
}

TEST(Reconstruct, AlwaysPhysical) {
  const qmath::DensityMatrix bell = qmath::DensityMatrix::from_pure(bell_phi_plus(), {1, 1});
  for (int s = 0; s < 50; ++s) {
    const qmath::DensityMatrix rec = reconstruct(simulate_counts(bell, 30.0, static_cast<std::uint64_t>(s)));
    for (double ev : qmath::eigvals_hermitian(rec.entries())) EXPECT_GE(ev, -1e-12);
    EXPECT_NEAR(rec.entries().trace().real(), 1.0, 1e-12);
    EXPECT_EQ(rec.qubit_dims(), (std::vector<int>{1, 1}));
  }
}

TEST(Reconstruct, ZeroCountGroupIsAnError) {
  TomographyRun run = expected_counts(qmath::DensityMatrix::maximally_mixed(2), 100.0);
  for (std::size_t k = 0; k < run.settings.size(); ++k) {
    if (run.settings[k].label().starts_with("x") && run.settings[k].label()[2] == 'y') run.counts[k] = 0.0;
  }
  EXPECT_THROW(reconstruct(run), ReconstructionError);
}

TEST(Reconstruct, RejectsIncompleteSettingList) {
  TomographyRun run = expected_counts(qmath::DensityMatrix::maximally_mixed(2), 100.0);
  run.settings.pop_back();
  run.counts.pop_back();
  EXPECT_THROW(reconstruct(run), std::invalid_argument);
  const TomographyRun z_only =
      expected_counts(qmath::DensityMatrix::maximally_mixed(2), 100.0,
                      {all_settings()[0], all_settings()[1], all_settings()[6], all_settings()[7]});
  EXPECT_THROW(reconstruct_subset(z_only), ReconstructionError);
}

TEST(PsdProject, Examples) {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = 1.1;
  m(1, 1) = -0.1;
  Matrix want = Matrix::Zero(2, 2);
  want(0, 0) = 1.0;
  EXPECT_LT(max_abs_diff(psd_project(m).entries(), want), 1e-12);

  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix rho = random_state_entries(4, rng);
    EXPECT_LT(max_abs_diff(psd_project(rho).entries(), rho), 1e-12);
  }
  Matrix skew = Matrix::Zero(2, 2);
  skew(0, 1) = 1.0;
  EXPECT_THROW(psd_project(skew), std::invalid_argument);
}

TEST(PsdProject, NoRandomCandidateIsCloser) {
  std::mt19937_64 rng(13);
  std::normal_distribution<double> g(0.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix noise = random_ginibre(4, rng);
    const Matrix m = random_state_entries(4, rng) + 0.15 * (noise + noise.adjoint()) / 2.0;
    const Matrix hm = (m + m.adjoint()) / 2.0;
    const Matrix out = psd_project(hm).entries();
    const double best = (out - hm).norm();
    for (double ev : qmath::eigvals_hermitian(out)) EXPECT_GE(ev, -1e-12);
    EXPECT_NEAR(out.trace().real(), 1.0, 1e-12);
    for (int k = 0; k < 400; ++k) {
      // Random states, and small physical perturbations of the answer.
      Matrix candidate = random_state_entries(4, rng);
      if (k % 2 == 1) {
        const double t = 0.05 * std::abs(g(rng));
        candidate = (1.0 - t) * out + t * candidate;
      }
      EXPECT_GE((candidate - hm).norm(), best - 1e-12);
    }
  }
}

}  // namespace
}  // namespace dqc1sim::tomography
