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

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dqc1sim/qmath.hpp"

// Two-qubit state tomography from projective counts in the product
// eigenbases of Z, X and Y.
namespace dqc1sim::tomography {

using qmath::DensityMatrix;

/// +/-1 eigenstates of Z, X, Y: |0>, |1>, |+>, |->, |+i>, |-i>.
enum class Eigenstate { z_plus, z_minus, x_plus, x_minus, y_plus, y_minus };

/// "z+", "z-", "x+", ...
std::string_view to_string(Eigenstate s);
Eigenstate parse_eigenstate(std::string_view label);
Vector state_vector(Eigenstate s);

struct TomographySetting {
  Eigenstate a = Eigenstate::z_plus;  // control
  Eigenstate b = Eigenstate::z_plus;  // register

  /// Rank-1 projector |a b><a b|.
  Matrix projector() const;
  /// e.g. "x+z-".
  std::string label() const;
  static TomographySetting parse(std::string_view label);

  bool operator==(const TomographySetting& other) const = default;
};

/// All 36 product settings, control basis slowest, order z+ z- x+ x- y+ y-.
std::vector<TomographySetting> all_settings();

/// 16 settings {z+, z-, x+, y+}^2; informationally complete.
std::vector<TomographySetting> minimal_settings();

struct TomographyRun {
  std::vector<TomographySetting> settings;
  /// Non-negative counts, one per setting. Simulated runs hold integers;
  /// noiseless runs may hold expected (fractional) counts.
  std::vector<double> counts;
  double mean_counts = 0.0;
  std::uint64_t seed = 0;
};

/// counts[k] ~ Poisson(mean_counts * Tr(rho Pi_k)).
TomographyRun simulate_counts(const DensityMatrix& rho, double mean_counts, std::uint64_t seed,
                              const std::vector<TomographySetting>& settings = all_settings());

/// Noise-free counts mean_counts * Tr(rho Pi_k).
TomographyRun expected_counts(const DensityMatrix& rho, double mean_counts,
                              const std::vector<TomographySetting>& settings = all_settings());

/// Least-squares estimate of the 16 two-qubit Pauli expectations from
/// group-normalised frequencies. The result is Hermitian with unit trace but
/// not necessarily PSD. Groups are the four outcomes of one basis pair;
/// counts are normalised within complete groups, and incomplete groups use
/// the mean total of the complete ones. Throws ReconstructionError when a
/// needed group has zero counts or no group is complete.
Matrix linear_inversion(const std::vector<TomographySetting>& settings,
                        const std::vector<double>& counts);

/// Nearest (Frobenius) PSD matrix with the given trace: eigenvalues are
/// projected onto the simplex, eigenvectors kept. Input must be Hermitian
/// within 1e-8.
Matrix psd_project_matrix(const Matrix& m, double target_trace);

/// psd_project_matrix with unit trace, as a validated state.
DensityMatrix psd_project(const Matrix& m, std::vector<int> qubit_dims = {});

/// linear_inversion + psd_project. Requires all 36 settings.
DensityMatrix reconstruct(const TomographyRun& run);

/// Same estimator over any informationally complete subset of settings.
DensityMatrix reconstruct_subset(const TomographyRun& run);

}  // namespace dqc1sim::tomography
