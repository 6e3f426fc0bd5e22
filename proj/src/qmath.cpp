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

#include "dqc1sim/qmath.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>

namespace dqc1sim::qmath {
namespace {

constexpr double kEigInputHermitianTol = 1e-9;
constexpr double kExpectationImagTol = 1e-10;

int log2_exact(Eigen::Index dim) {
  if (dim <= 0 || (dim & (dim - 1)) != 0) {
    throw std::invalid_argument("matrix dimension " + std::to_string(dim) +
                                " is not a power of two");
  }
  int q = 0;
  while ((Eigen::Index{1} << q) < dim) ++q;
  return q;
}

std::vector<int> resolve_dims(Eigen::Index dim, std::vector<int> qubit_dims) {
  const int total = log2_exact(dim);
  if (qubit_dims.empty()) return {total};
  for (int q : qubit_dims) {
    if (q < 1) throw std::invalid_argument("subsystem qubit count must be >= 1");
  }
  if (std::accumulate(qubit_dims.begin(), qubit_dims.end(), 0) != total) {
    throw std::invalid_argument("subsystem qubit counts do not sum to " +
                                std::to_string(total));
  }
  return qubit_dims;
}

}  // namespace

Matrix identity(std::size_t dim) {
  return Matrix::Identity(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
}

Matrix pauli_i() { return identity(2); }

Matrix pauli_x() {
  Matrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

Matrix pauli_y() {
  Matrix m(2, 2);
  m << 0, Complex(0, -1), Complex(0, 1), 0;
  return m;
}

Matrix pauli_z() {
  Matrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

Matrix tensor(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Matrix tensor(std::span<const Matrix> factors) {
  if (factors.empty()) return identity(1);
  Matrix out = factors.front();
  for (std::size_t k = 1; k < factors.size(); ++k) out = tensor(out, factors[k]);
  return out;
}

double hermitian_defect(const Matrix& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  if (m.size() == 0) return 0.0;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

bool is_hermitian(const Matrix& m, double tol) { return hermitian_defect(m) <= tol; }

HermitianEigen eigh(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("Hermitian eigendecomposition did not converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

std::vector<double> eigvals_hermitian(const Matrix& m) {
  if (!is_hermitian(m, kEigInputHermitianTol)) {
    throw std::invalid_argument("eigvals_hermitian: input is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("Hermitian eigendecomposition did not converge");
  }
  std::vector<double> out(solver.eigenvalues().begin(), solver.eigenvalues().end());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

Matrix sqrt_psd(const Matrix& m) {
  auto [values, vectors] = eigh(m);
  Eigen::VectorXd roots = values.cwiseMax(0.0).cwiseSqrt();
  return vectors * roots.cast<Complex>().asDiagonal() * vectors.adjoint();
}

double shannon_bits(std::span<const double> probabilities) {
  double h = 0.0;
  for (double p : probabilities) {
    if (p < -kNegativeEigenTol) {
      throw std::invalid_argument("negative probability " + std::to_string(p) +
                                  " below tolerance");
    }
    if (p > 0.0) h -= p * std::log2(p);
  }
  return h;
}

DensityMatrix::DensityMatrix(Matrix entries, std::vector<int> qubit_dims)
    : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols()) {
    throw std::invalid_argument("density matrix must be square");
  }
  qubit_dims_ = resolve_dims(entries_.rows(), std::move(qubit_dims));
  if (std::abs(entries_.trace() - Complex(1.0)) > kTraceTol) {
    std::ostringstream msg;
    msg << "density matrix trace " << entries_.trace() << " differs from 1";
    throw std::invalid_argument(msg.str());
  }
  if (!is_hermitian(entries_, kHermitianTol)) {
    throw std::invalid_argument("density matrix is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(entries_, Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < -kNegativeEigenTol) {
    throw std::invalid_argument("density matrix has eigenvalue " +
                                std::to_string(solver.eigenvalues().minCoeff()));
  }
}

DensityMatrix DensityMatrix::maximally_mixed(int qubits) {
  const Eigen::Index dim = Eigen::Index{1} << qubits;
  return DensityMatrix(Matrix::Identity(dim, dim) / static_cast<double>(dim));
}

DensityMatrix DensityMatrix::from_pure(const Vector& psi, std::vector<int> qubit_dims) {
  const double norm = psi.norm();
  if (norm == 0.0) throw std::invalid_argument("zero state vector");
  Vector v = psi / norm;
  return DensityMatrix(v * v.adjoint(), std::move(qubit_dims));
}

int DensityMatrix::num_qubits() const {
  return std::accumulate(qubit_dims_.begin(), qubit_dims_.end(), 0);
}

DensityMatrix DensityMatrix::regrouped(std::vector<int> qubit_dims) const {
  DensityMatrix out = *this;
  out.qubit_dims_ = resolve_dims(entries_.rows(), std::move(qubit_dims));
  return out;
}

Observable::Observable(Matrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols() || !is_hermitian(entries_, 1e-12)) {
    throw std::invalid_argument("observable is not Hermitian");
  }
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  std::vector<int> dims = a.qubit_dims();
  dims.insert(dims.end(), b.qubit_dims().begin(), b.qubit_dims().end());
  return DensityMatrix(tensor(a.entries(), b.entries()), std::move(dims));
}

Matrix trace_out_second(const Matrix& m, Eigen::Index dim_a, Eigen::Index dim_b) {
  Matrix out = Matrix::Zero(dim_a, dim_a);
  for (Eigen::Index i = 0; i < dim_a; ++i) {
    for (Eigen::Index j = 0; j < dim_a; ++j) {
      out(i, j) = m.block(i * dim_b, j * dim_b, dim_b, dim_b).trace();
    }
  }
  return out;
}

Matrix trace_out_first(const Matrix& m, Eigen::Index dim_a, Eigen::Index dim_b) {
  Matrix out = Matrix::Zero(dim_b, dim_b);
  for (Eigen::Index a = 0; a < dim_a; ++a) out += m.block(a * dim_b, a * dim_b, dim_b, dim_b);
  return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::size_t keep) {
  const auto& dims = rho.qubit_dims();
  if (dims.size() < 2) {
    throw std::invalid_argument("partial_trace needs at least two subsystems");
  }
  if (keep >= dims.size()) {
    throw std::invalid_argument("partial_trace: subsystem index " + std::to_string(keep) +
                                " out of range");
  }
  int before_qubits = 0;
  for (std::size_t k = 0; k < keep; ++k) before_qubits += dims[k];
  const int after_qubits = rho.num_qubits() - before_qubits - dims[keep];
  const Eigen::Index before = Eigen::Index{1} << before_qubits;
  const Eigen::Index kept = Eigen::Index{1} << dims[keep];
  const Eigen::Index after = Eigen::Index{1} << after_qubits;

  const Matrix& m = rho.entries();
  Matrix out = Matrix::Zero(kept, kept);
  for (Eigen::Index a = 0; a < before; ++a) {
    for (Eigen::Index i = 0; i < kept; ++i) {
      for (Eigen::Index j = 0; j < kept; ++j) {
        Complex acc = 0.0;
        for (Eigen::Index b = 0; b < after; ++b) {
          acc += m((a * kept + i) * after + b, (a * kept + j) * after + b);
        }
        out(i, j) += acc;
      }
    }
  }
  return DensityMatrix(std::move(out), {dims[keep]});
}

double vn_entropy_unchecked(const Matrix& rho) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(rho, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& w = solver.eigenvalues();
  return shannon_bits(std::span<const double>(w.data(), static_cast<std::size_t>(w.size())));
}

double vn_entropy(const DensityMatrix& rho) { return vn_entropy_unchecked(rho.entries()); }

double expectation(const DensityMatrix& rho, const Observable& obs) {
  if (rho.dim() != obs.dim()) {
    throw std::invalid_argument("expectation: dimension mismatch (" + std::to_string(rho.dim()) +
                                " vs " + std::to_string(obs.dim()) + ")");
  }
  const Complex value = (rho.entries() * obs.entries()).trace();
  if (std::abs(value.imag()) > kExpectationImagTol) {
    throw std::runtime_error("expectation has imaginary part " + std::to_string(value.imag()));
  }
  return value.real();
}

constexpr double kSupportCut = 1e-14;

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) throw std::invalid_argument("fidelity: dimension mismatch");
  // Round-off eigenvalues below the support cut count as zero.
  const auto support_roots = [](const Eigen::VectorXd& values) {
    const double cut = kSupportCut * std::max(1.0, values.cwiseAbs().maxCoeff());
    return values.unaryExpr([cut](double v) { return v > cut ? std::sqrt(v) : 0.0; }).eval();
  };
  const HermitianEigen er = eigh(rho.entries());
  const Matrix root =
      er.vectors * support_roots(er.values).cast<Complex>().asDiagonal() * er.vectors.adjoint();
  Matrix inner = root * sigma.entries() * root;
  inner = (inner + inner.adjoint()) / 2.0;
  const double tr = support_roots(eigh(inner).values).sum();
  return std::clamp(tr * tr, 0.0, 1.0);
}

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) throw std::invalid_argument("trace_distance: dimension mismatch");
  Matrix diff = rho.entries() - sigma.entries();
  Eigen::SelfAdjointEigenSolver<Matrix> solver(diff, Eigen::EigenvaluesOnly);
  return 0.5 * solver.eigenvalues().cwiseAbs().sum();
}

}  // namespace dqc1sim::qmath
