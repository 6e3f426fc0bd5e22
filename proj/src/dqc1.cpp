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

#include "dqc1sim/dqc1.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace dqc1sim::dqc1 {

UnitarityDefect unitarity_defect(const Matrix& m) {
  const Matrix gram = m.adjoint() * m - Matrix::Identity(m.rows(), m.cols());
  UnitarityDefect worst;
  for (Eigen::Index i = 0; i < gram.rows(); ++i) {
    for (Eigen::Index j = 0; j < gram.cols(); ++j) {
      if (std::abs(gram(i, j)) > worst.magnitude) worst = {i, j, std::abs(gram(i, j))};
    }
  }
  return worst;
}

Unitary::Unitary(Matrix entries, double tol) : entries_(std::move(entries)) {
  const Eigen::Index dim = entries_.rows();
  if (dim != entries_.cols() || dim < 2 || (dim & (dim - 1)) != 0) {
    throw std::invalid_argument("unitary must be square with power-of-two dimension >= 2");
  }
  while ((Eigen::Index{1} << n_) < dim) ++n_;
  const UnitarityDefect d = unitarity_defect(entries_);
  if (d.magnitude > tol) {
    std::ostringstream msg;
    msg << "matrix is not unitary: |(U^dagger U - I)[" << d.row << "][" << d.col
        << "]| = " << d.magnitude << " exceeds " << tol;
    throw std::invalid_argument(msg.str());
  }
}

void check_alpha(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("alpha must lie in [0, 1], got " + std::to_string(alpha));
  }
}

Unitary z_theta(double theta) {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = 1.0;
  m(1, 1) = std::polar(1.0, theta);
  return Unitary(std::move(m));
}

DensityMatrix build_input(int n, double alpha) {
  if (n < 1) throw std::invalid_argument("register size must be >= 1");
  check_alpha(alpha);
  const Eigen::Index N = Eigen::Index{1} << n;
  Matrix m = Matrix::Zero(2 * N, 2 * N);
  const double scale = 1.0 / static_cast<double>(2 * N);
  for (Eigen::Index k = 0; k < N; ++k) {
    m(k, k) = scale * (1.0 + alpha);
    m(N + k, N + k) = scale * (1.0 - alpha);
  }
  return DensityMatrix(std::move(m), {1, n});
}

DensityMatrix output_state(const Unitary& u, double alpha) {
  check_alpha(alpha);
  const Eigen::Index N = u.dim();
  Matrix m(2 * N, 2 * N);
  m.topLeftCorner(N, N).setIdentity();
  m.bottomRightCorner(N, N).setIdentity();
  m.topRightCorner(N, N) = alpha * u.entries().adjoint();
  m.bottomLeftCorner(N, N) = alpha * u.entries();
  m /= static_cast<double>(2 * N);
  return DensityMatrix(std::move(m), {1, u.num_qubits()});
}

Matrix controlled(const Unitary& u) {
  const Eigen::Index N = u.dim();
  Matrix m = Matrix::Zero(2 * N, 2 * N);
  m.topLeftCorner(N, N).setIdentity();
  m.bottomRightCorner(N, N) = u.entries();
  return m;
}

Matrix hadamard_on_control(int n) {
  Matrix h(2, 2);
  h << 1, 1, 1, -1;
  h /= std::sqrt(2.0);
  return qmath::tensor(h, qmath::identity(std::size_t{1} << n));
}

DensityMatrix output_state_by_circuit(const Unitary& u, double alpha) {
  const DensityMatrix input = build_input(u.num_qubits(), alpha);
  const Matrix w = controlled(u) * hadamard_on_control(u.num_qubits());
  Matrix out = w * input.entries() * w.adjoint();
  // Round-off can leave a 1e-17 anti-Hermitian residue.
  out = (out + out.adjoint()) / 2.0;
  return DensityMatrix(std::move(out), {1, u.num_qubits()});
}

Complex normalized_trace(const Unitary& u) {
  return u.entries().trace() / static_cast<double>(u.dim());
}

DensityMatrix reduced_control(const Unitary& u, double alpha) {
  check_alpha(alpha);
  const Complex t = normalized_trace(u);
  Matrix m(2, 2);
  m << 0.5, alpha * std::conj(t) / 2.0, alpha * t / 2.0, 0.5;
  return DensityMatrix(std::move(m));
}

PauliExpectations exact_expectations(const Unitary& u, double alpha) {
  check_alpha(alpha);
  const Complex t = normalized_trace(u);
  return {alpha * t.real(), alpha * t.imag()};
}

}  // namespace dqc1sim::dqc1
