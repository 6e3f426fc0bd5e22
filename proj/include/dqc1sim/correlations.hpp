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

#include <array>
#include <cstddef>
#include <optional>
#include <string>

#include "dqc1sim/qmath.hpp"

// Correlation measures on bipartite states. Every state passed here must
// carry exactly two subsystems in its qubit_dims: subsystem 0 is the control
// qubit c, subsystem 1 the register r. All entropies are in bits.
namespace dqc1sim::correlations {

using qmath::DensityMatrix;

/// Measurement axis on the Bloch sphere. The measurement is the projector
/// pair {(I + n.sigma)/2, (I - n.sigma)/2}.
struct BlochDirection {
  double polar = 0.0;    // [0, pi]
  double azimuth = 0.0;  // [0, 2 pi)

  std::array<double, 3> unit() const;
  /// Eigenvectors of n.sigma for eigenvalue +1 and -1.
  Vector plus_state() const;
  Vector minus_state() const;

  /// Wraps arbitrary spherical angles onto the canonical ranges.
  static BlochDirection canonical(double polar, double azimuth);
};

enum class MeasuredSide {
  control,   // D(r,c): condition on projective measurements of c
  register_  // D(c,r): condition on measurements of r
};

std::size_t subsystem_index(MeasuredSide side);
const char* to_string(MeasuredSide side);

struct OptimizerOptions {
  int polar_steps = 64;
  int azimuth_steps = 128;
  /// Convergence threshold on the objective spread of the simplex.
  double tolerance = 1e-8;
  /// Number of best grid points refined independently.
  int refine_starts = 4;
  int max_iterations = 400;
};

struct ConditionalEntropy {
  double bits = 0.0;
  BlochDirection direction;
  int evaluations = 0;
};

/// I = H(rho_c) + H(rho_r) - H(rho_cr).
double mutual_information(const DensityMatrix& rho);

/// Average entropy of the unmeasured side after measuring subsystem
/// `measured` along `direction`.
double conditional_entropy(const DensityMatrix& rho, std::size_t measured,
                           const BlochDirection& direction);

/// Minimum of conditional_entropy over all rank-1 projective measurements of
/// a one-qubit subsystem: deterministic grid search followed by Nelder-Mead
/// refinement of the best grid points. Throws UnsupportedError when the
/// measured subsystem has more than one qubit.
ConditionalEntropy min_conditional_entropy(const DensityMatrix& rho, std::size_t measured,
                                           const OptimizerOptions& options = {});

struct DiscordResult {
  double discord = 0.0;
  double mutual_info = 0.0;
  ConditionalEntropy measurement;
};

DiscordResult discord_detail(const DensityMatrix& rho, MeasuredSide side,
                             const OptimizerOptions& options = {});
double discord(const DensityMatrix& rho, MeasuredSide side);

/// Discord restricted to product measurements in Pauli eigenbases on the
/// measured subsystem (3^k choices for k measured qubits). This is an upper
/// bound on the discord and works for multi-qubit measured subsystems; a
/// value of zero certifies zero discord.
double pauli_product_discord_bound(const DensityMatrix& rho, MeasuredSide side);

/// Wootters concurrence of a two-qubit state.
double concurrence(const DensityMatrix& rho);
double tangle(const DensityMatrix& rho);

struct CorrelationReport {
  double mutual_info = 0.0;
  double discord_rc = 0.0;  // measure on c
  double discord_cr = 0.0;  // measure on r
  /// "projective" (full optimisation) or "pauli_product_bound".
  std::string discord_cr_method = "projective";
  std::optional<double> tangle;  // two-qubit states only
  BlochDirection argmin_direction;
  std::optional<BlochDirection> argmin_direction_cr;
  int optimizer_evals = 0;
};

/// Full analysis. When the register has more than one qubit, discord_cr is
/// the Pauli-product upper bound and tangle is omitted.
CorrelationReport analyze(const DensityMatrix& rho, const OptimizerOptions& options = {});

}  // namespace dqc1sim::correlations
