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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace dqc1sim {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

namespace qmath {

/// Tolerances for the state invariants.
inline constexpr double kTraceTol = 1e-10;
inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kNegativeEigenTol = 1e-9;

/// Single-qubit Pauli matrices.
Matrix identity(std::size_t dim);
Matrix pauli_i();
Matrix pauli_x();
Matrix pauli_y();
Matrix pauli_z();

/// Kronecker product; `a`'s index varies slowest.
Matrix tensor(const Matrix& a, const Matrix& b);
Matrix tensor(std::span<const Matrix> factors);

bool is_hermitian(const Matrix& m, double tol);

/// Largest |entry| of m - m^dagger.
double hermitian_defect(const Matrix& m);

/// Eigenvalues of a Hermitian matrix in descending order. Throws
/// std::invalid_argument when m is not Hermitian within 1e-9.
std::vector<double> eigvals_hermitian(const Matrix& m);

/// Spectral decomposition with ascending eigenvalues (no Hermiticity check).
struct HermitianEigen {
  Eigen::VectorXd values;
  Matrix vectors;
};
HermitianEigen eigh(const Matrix& m);

/// Principal square root of a PSD matrix; negative eigenvalues are clamped.
Matrix sqrt_psd(const Matrix& m);

/// Shannon entropy in bits of a probability vector. Entries in
/// [-1e-9, 0) are treated as zero; anything more negative throws.
double shannon_bits(std::span<const double> probabilities);

/// A Hermitian, unit-trace, positive semidefinite matrix over a register of
/// qubits split into ordered subsystems (qubit counts, slowest first).
class DensityMatrix {
 public:
  /// Validates all invariants; `qubit_dims` empty means one subsystem.
  explicit DensityMatrix(Matrix entries, std::vector<int> qubit_dims = {});

  static DensityMatrix maximally_mixed(int qubits);
  static DensityMatrix from_pure(const Vector& psi, std::vector<int> qubit_dims = {});

  const Matrix& entries() const { return entries_; }
  Eigen::Index dim() const { return entries_.rows(); }
  int num_qubits() const;
  const std::vector<int>& qubit_dims() const { return qubit_dims_; }

  /// Same entries regrouped into a different subsystem split.
  DensityMatrix regrouped(std::vector<int> qubit_dims) const;

 private:
  Matrix entries_;
  std::vector<int> qubit_dims_;
};

class Observable {
 public:
  explicit Observable(Matrix entries);
  const Matrix& entries() const { return entries_; }
  Eigen::Index dim() const { return entries_.rows(); }

 private:
  Matrix entries_;
};

/// Tensor product of states; subsystem lists are concatenated.
DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

/// Reduced state of subsystem `keep`. Needs at least two subsystems.
DensityMatrix partial_trace(const DensityMatrix& rho, std::size_t keep);

/// Unnormalized partial trace of a (dim_a*dim_b)-square matrix.
Matrix trace_out_second(const Matrix& m, Eigen::Index dim_a, Eigen::Index dim_b);
Matrix trace_out_first(const Matrix& m, Eigen::Index dim_a, Eigen::Index dim_b);

/// Von Neumann entropy in bits.
double vn_entropy(const DensityMatrix& rho);

/// Entropy of a Hermitian unit-trace matrix without invariant checks; used
/// on hot paths where the caller already guarantees validity.
double vn_entropy_unchecked(const Matrix& rho);

/// Tr(rho * obs); throws on dimension mismatch or a non-negligible
/// imaginary part.
double expectation(const DensityMatrix& rho, const Observable& obs);

/// Uhlmann fidelity (Tr sqrt(sqrt(rho) sigma sqrt(rho)))^2.
double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

/// Half the trace norm of rho - sigma.
double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

}  // namespace qmath
}  // namespace dqc1sim
