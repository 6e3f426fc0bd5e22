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

#include "dqc1sim/qmath.hpp"

namespace dqc1sim::dqc1 {

using qmath::DensityMatrix;

/// Unitary on an n-qubit register.
class Unitary {
 public:
  /// Throws std::invalid_argument if U^dagger U differs from I by more than
  /// `tol` in any entry, or the dimension is not a power of two.
  explicit Unitary(Matrix entries, double tol = 1e-10);

  const Matrix& entries() const { return entries_; }
  int num_qubits() const { return n_; }
  Eigen::Index dim() const { return entries_.rows(); }

 private:
  Matrix entries_;
  int n_ = 0;
};

/// Worst entry of U^dagger U - I, reported by unitarity validation.
struct UnitarityDefect {
  Eigen::Index row = 0;
  Eigen::Index col = 0;
  double magnitude = 0.0;
};
UnitarityDefect unitarity_defect(const Matrix& m);

struct Dqc1Config {
  int n = 1;
  double alpha = 1.0;
  double theta = 0.0;

  /// Purity of the control qubit, (1 + alpha^2) / 2.
  double purity() const { return (1.0 + alpha * alpha) / 2.0; }
};

struct PauliExpectations {
  double x = 0.0;
  double y = 0.0;
};

/// diag(1, e^{i theta}).
Unitary z_theta(double theta);

/// (I + alpha Z (x) I_n) / 2^{n+1}, subsystems [1, n].
DensityMatrix build_input(int n, double alpha);

/// Closed-form output (1/2N) [[I, alpha U^dagger], [alpha U, I]].
DensityMatrix output_state(const Unitary& u, double alpha);

/// Same state obtained by evolving build_input through the circuit:
/// Hadamard on the control followed by controlled-U.
DensityMatrix output_state_by_circuit(const Unitary& u, double alpha);

/// diag(I_n, U) with the control as the slowest index.
Matrix controlled(const Unitary& u);

/// H (x) I_n.
Matrix hadamard_on_control(int n);

/// Control-qubit marginal [[1/2, alpha Tr(U)^* / 2N], [alpha Tr(U) / 2N, 1/2]].
DensityMatrix reduced_control(const Unitary& u, double alpha);

/// <X> = alpha Re[Tr U / N], <Y> = alpha Im[Tr U / N] on the control.
PauliExpectations exact_expectations(const Unitary& u, double alpha);

/// Tr(U) / 2^n.
Complex normalized_trace(const Unitary& u);

/// Throws std::invalid_argument unless 0 <= alpha <= 1.
void check_alpha(double alpha);

}  // namespace dqc1sim::dqc1
