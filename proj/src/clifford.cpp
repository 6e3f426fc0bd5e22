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

#include "dqc1sim/clifford.hpp"

#include <cmath>
#include <stdexcept>

namespace dqc1sim::clifford {
namespace {

std::size_t words_for(std::size_t n) { return (n + 63) / 64; }

Eigen::Index bit_of(Eigen::Index index, int q, int n) { return (index >> (n - 1 - q)) & 1; }

}  // namespace

// Bit-plane updates for each gate. The sign rules are the
// Aaronson-Gottesman tableau rules for Hermitian Paulis, so a +/-1 phase
// is all that can arise.
class PauliConjugator {
 public:
  static void apply(const Gate& g, PauliString& p) {
    const auto a = static_cast<std::size_t>(g.q0);
    switch (g.kind) {
      case GateKind::H: {
        const bool x = p.x_bit(a), z = p.z_bit(a);
        p.negative_ ^= x && z;
        set(p.x_, a, z);
        set(p.z_, a, x);
        break;
      }
      case GateKind::S: {
        const bool x = p.x_bit(a), z = p.z_bit(a);
        p.negative_ ^= x && z;
        set(p.z_, a, z ^ x);
        break;
      }
      case GateKind::X:
        p.negative_ ^= p.z_bit(a);
        break;
      case GateKind::Z:
        p.negative_ ^= p.x_bit(a);
        break;
      case GateKind::CNOT: {
        const auto t = static_cast<std::size_t>(g.q1);
        const bool xc = p.x_bit(a), zc = p.z_bit(a), xt = p.x_bit(t), zt = p.z_bit(t);
        p.negative_ ^= xc && zt && !(xt ^ zc);
        set(p.x_, t, xt ^ xc);
        set(p.z_, a, zc ^ zt);
        break;
      }
      case GateKind::CZ: {
        const auto b = static_cast<std::size_t>(g.q1);
        const bool xa = p.x_bit(a), za = p.z_bit(a), xb = p.x_bit(b), zb = p.z_bit(b);
        p.negative_ ^= xa && xb && (za ^ zb);
        set(p.z_, a, za ^ xb);
        set(p.z_, b, zb ^ xa);
        break;
      }
    }
  }

 private:
  static void set(std::vector<std::uint64_t>& plane, std::size_t q, bool v) {
    const std::uint64_t mask = std::uint64_t{1} << (q % 64);
    if (v) {
      plane[q / 64] |= mask;
    } else {
      plane[q / 64] &= ~mask;
    }
  }
};

char to_char(PauliLabel p) {
  switch (p) {
    case PauliLabel::I: return 'I';
    case PauliLabel::Z: return 'Z';
    case PauliLabel::X: return 'X';
    case PauliLabel::Y: return 'Y';
  }
  return '?';
}

PauliString::PauliString(std::size_t num_qubits)
    : n_(num_qubits), x_(words_for(num_qubits), 0), z_(words_for(num_qubits), 0) {}

PauliString PauliString::parse(std::string_view text) {
  bool negative = false;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  PauliString p(text.size());
  p.negative_ = negative;
  for (std::size_t q = 0; q < text.size(); ++q) {
    switch (text[q]) {
      case 'I': break;
      case 'Z': p.set_label(q, PauliLabel::Z); break;
      case 'X': p.set_label(q, PauliLabel::X); break;
      case 'Y': p.set_label(q, PauliLabel::Y); break;
      default:
        throw std::invalid_argument("invalid Pauli label '" + std::string(1, text[q]) + "'");
    }
  }
  return p;
}

PauliString PauliString::single(std::size_t num_qubits, std::size_t q, PauliLabel label) {
  PauliString p(num_qubits);
  p.set_label(q, label);
  return p;
}

void PauliString::set_phase(int phase) {
  if (phase != 1 && phase != -1) throw std::invalid_argument("Pauli phase must be +1 or -1");
  negative_ = phase < 0;
}

PauliLabel PauliString::label(std::size_t q) const {
  if (q >= n_) throw std::out_of_range("Pauli qubit index out of range");
  const bool x = x_bit(q), z = z_bit(q);
  if (x && z) return PauliLabel::Y;
  if (x) return PauliLabel::X;
  if (z) return PauliLabel::Z;
  return PauliLabel::I;
}

void PauliString::set_label(std::size_t q, PauliLabel label) {
  if (q >= n_) throw std::out_of_range("Pauli qubit index out of range");
  const bool x = label == PauliLabel::X || label == PauliLabel::Y;
  const bool z = label == PauliLabel::Z || label == PauliLabel::Y;
  const std::uint64_t mask = std::uint64_t{1} << (q % 64);
  x_[q / 64] = x ? (x_[q / 64] | mask) : (x_[q / 64] & ~mask);
  z_[q / 64] = z ? (z_[q / 64] | mask) : (z_[q / 64] & ~mask);
}

std::size_t PauliString::weight() const {
  std::size_t w = 0;
  for (std::size_t k = 0; k < x_.size(); ++k) w += static_cast<std::size_t>(__builtin_popcountll(x_[k] | z_[k]));
  return w;
}

std::string PauliString::to_string() const {
  std::string out(1, negative_ ? '-' : '+');
  for (std::size_t q = 0; q < n_; ++q) out += to_char(label(q));
  return out;
}

Matrix PauliString::dense() const {
  Matrix out = Matrix::Identity(1, 1) * static_cast<double>(phase());
  for (std::size_t q = 0; q < n_; ++q) {
    switch (label(q)) {
      case PauliLabel::I: out = qmath::tensor(out, qmath::pauli_i()); break;
      case PauliLabel::Z: out = qmath::tensor(out, qmath::pauli_z()); break;
      case PauliLabel::X: out = qmath::tensor(out, qmath::pauli_x()); break;
      case PauliLabel::Y: out = qmath::tensor(out, qmath::pauli_y()); break;
    }
  }
  return out;
}

const char* to_string(GateKind kind) {
  switch (kind) {
    case GateKind::H: return "H";
    case GateKind::S: return "S";
    case GateKind::CZ: return "CZ";
    case GateKind::CNOT: return "CNOT";
    case GateKind::X: return "X";
    case GateKind::Z: return "Z";
  }
  return "?";
}

bool is_two_qubit(GateKind kind) { return kind == GateKind::CZ || kind == GateKind::CNOT; }

CliffordCircuit::CliffordCircuit(int num_qubits) : n_(num_qubits) {
  if (num_qubits < 1) throw std::invalid_argument("circuit needs at least one qubit");
}

CliffordCircuit& CliffordCircuit::add(Gate gate) {
  auto in_range = [this](int q) { return q >= 0 && q < n_; };
  if (!in_range(gate.q0)) {
    throw std::invalid_argument(std::string(to_string(gate.kind)) + ": qubit " +
                                std::to_string(gate.q0) + " out of range");
  }
  if (is_two_qubit(gate.kind)) {
    if (!in_range(gate.q1)) {
      throw std::invalid_argument(std::string(to_string(gate.kind)) + ": qubit " +
                                  std::to_string(gate.q1) + " out of range");
    }
    if (gate.q0 == gate.q1) {
      throw std::invalid_argument(std::string(to_string(gate.kind)) +
                                  " must act on two distinct qubits");
    }
  } else {
    gate.q1 = -1;
  }
  gates_.push_back(gate);
  return *this;
}

CliffordCircuit CliffordCircuit::inverse() const {
  CliffordCircuit out(n_);
  for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) {
    // S^-1 = S^3; every other gate is self-inverse.
    const int copies = it->kind == GateKind::S ? 3 : 1;
    for (int k = 0; k < copies; ++k) out.add(*it);
  }
  return out;
}

PauliString conjugate_gate(const Gate& gate, PauliString p) {
  const auto limit = static_cast<int>(p.size());
  if (gate.q0 < 0 || gate.q0 >= limit || (is_two_qubit(gate.kind) && (gate.q1 < 0 || gate.q1 >= limit))) {
    throw std::invalid_argument("gate qubit out of range for Pauli string");
  }
  PauliConjugator::apply(gate, p);
  return p;
}

PauliString propagate(const CliffordCircuit& circuit, PauliString p) {
  if (p.size() != static_cast<std::size_t>(circuit.num_qubits())) {
    throw std::invalid_argument("Pauli string length " + std::to_string(p.size()) +
                                " does not match circuit width " +
                                std::to_string(circuit.num_qubits()));
  }
  for (const Gate& g : circuit.gates()) PauliConjugator::apply(g, p);
  return p;
}

Matrix gate_matrix(const Gate& gate, int n) {
  const Eigen::Index dim = Eigen::Index{1} << n;
  if (!is_two_qubit(gate.kind)) {
    Matrix g(2, 2);
    switch (gate.kind) {
      case GateKind::H: g << 1, 1, 1, -1; g /= std::sqrt(2.0); break;
      case GateKind::S: g << 1, 0, 0, Complex(0, 1); break;
      case GateKind::X: g = qmath::pauli_x(); break;
      case GateKind::Z: g = qmath::pauli_z(); break;
      default: break;
    }
    const Matrix left = qmath::identity(std::size_t{1} << gate.q0);
    const Matrix right = qmath::identity(std::size_t{1} << (n - 1 - gate.q0));
    return qmath::tensor(qmath::tensor(left, g), right);
  }
  Matrix m = Matrix::Zero(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    const bool a = bit_of(i, gate.q0, n) != 0;
    const bool b = bit_of(i, gate.q1, n) != 0;
    if (gate.kind == GateKind::CZ) {
      m(i, i) = (a && b) ? -1.0 : 1.0;
    } else {
      const Eigen::Index flipped = a ? (i ^ (Eigen::Index{1} << (n - 1 - gate.q1))) : i;
      m(flipped, i) = 1.0;
    }
  }
  return m;
}

Matrix to_dense(const CliffordCircuit& circuit) {
  const Eigen::Index dim = Eigen::Index{1} << circuit.num_qubits();
  Matrix w = Matrix::Identity(dim, dim);
  for (const Gate& g : circuit.gates()) w = gate_matrix(g, circuit.num_qubits()) * w;
  return w;
}

dqc1::PauliExpectations dqc1_clifford_expectations(const CliffordCircuit& circuit, double alpha) {
  dqc1::check_alpha(alpha);
  const auto n = static_cast<std::size_t>(circuit.num_qubits());
  const PauliString out = propagate(circuit, PauliString::single(n, 0, PauliLabel::Z));
  dqc1::PauliExpectations e;
  // Tr(rho X_0) is non-zero only when the propagated term is exactly X_0.
  if (out.weight() == 1) {
    if (out.label(0) == PauliLabel::X) e.x = alpha * out.phase();
    if (out.label(0) == PauliLabel::Y) e.y = alpha * out.phase();
  }
  return e;
}

qmath::DensityMatrix dense_dqc1_output(const CliffordCircuit& circuit, double alpha) {
  dqc1::check_alpha(alpha);
  const int n = circuit.num_qubits();
  if (n < 2) throw std::invalid_argument("DQC1 circuit needs a control and a register");
  const Eigen::Index dim = Eigen::Index{1} << n;
  const Matrix w = to_dense(circuit);
  const Matrix z0 = PauliString::single(static_cast<std::size_t>(n), 0, PauliLabel::Z).dense();
  Matrix rho = (Matrix::Identity(dim, dim) + alpha * w * z0 * w.adjoint()) / static_cast<double>(dim);
  rho = (rho + rho.adjoint()) / 2.0;
  return qmath::DensityMatrix(std::move(rho), {1, n - 1});
}

ZeroDiscordReport verify_zero_discord(const CliffordCircuit& circuit) {
  const int n = circuit.num_qubits();
  ZeroDiscordReport report;
  report.propagated =
      propagate(circuit, PauliString::single(static_cast<std::size_t>(n), 0, PauliLabel::Z));

  CliffordCircuit rotation(n);
  for (int q = 0; q < n; ++q) {
    LocalRotation r;
    r.qubit = q;
    r.from = report.propagated.label(static_cast<std::size_t>(q));
    switch (r.from) {
      case PauliLabel::I:
        r.to = PauliLabel::I;
        break;
      case PauliLabel::Z:
        r.to = PauliLabel::Z;
        break;
      case PauliLabel::X:
        r.to = PauliLabel::Z;
        r.gates = {GateKind::H};
        break;
      case PauliLabel::Y:
        // S^dagger = S^3 takes Y to X, then H takes X to Z.
        r.to = PauliLabel::Z;
        r.gates = {GateKind::S, GateKind::S, GateKind::S, GateKind::H};
        break;
    }
    for (GateKind k : r.gates) rotation.add({k, q});
    report.rotations.push_back(std::move(r));
  }
  report.diagonal_form = propagate(rotation, report.propagated);
  report.structurally_diagonal = true;
  for (std::size_t q = 0; q < static_cast<std::size_t>(n); ++q) {
    const PauliLabel l = report.diagonal_form.label(q);
    report.structurally_diagonal &= (l == PauliLabel::I || l == PauliLabel::Z);
  }

  report.verified = report.structurally_diagonal;
  if (n >= 2 && n <= kDenseCheckMaxQubits) {
    const qmath::DensityMatrix rho = dense_dqc1_output(circuit);
    DenseDiscordCheck check;
    const Eigen::Index dim = rho.dim();
    const Matrix predicted =
        (Matrix::Identity(dim, dim) + report.propagated.dense()) / static_cast<double>(dim);
    check.propagation_matches_dense = (predicted - rho.entries()).cwiseAbs().maxCoeff() < 1e-12;
    check.discord_rc = correlations::discord(rho, correlations::MeasuredSide::control);
    if (n == 2) {
      check.discord_cr = correlations::discord(rho, correlations::MeasuredSide::register_);
      check.discord_cr_method = "projective";
    } else {
      check.discord_cr =
          correlations::pauli_product_discord_bound(rho, correlations::MeasuredSide::register_);
      check.discord_cr_method = "pauli_product_bound";
    }
    report.verified = report.verified && check.propagation_matches_dense &&
                      std::abs(check.discord_rc) < kZeroDiscordTol &&
                      std::abs(check.discord_cr) < kZeroDiscordTol;
    report.dense = check;
  }
  return report;
}

CliffordCircuit random_circuit(int num_qubits, int num_gates, std::mt19937_64& rng) {
  CliffordCircuit c(num_qubits);
  std::uniform_int_distribution<int> kind_dist(0, num_qubits > 1 ? 5 : 3);
  std::uniform_int_distribution<int> qubit_dist(0, num_qubits - 1);
  static constexpr GateKind kOneQubit[] = {GateKind::H, GateKind::S, GateKind::X, GateKind::Z};
  static constexpr GateKind kTwoQubit[] = {GateKind::CZ, GateKind::CNOT};
  for (int k = 0; k < num_gates; ++k) {
    const int kind = kind_dist(rng);
    if (kind < 4) {
      c.add({kOneQubit[kind], qubit_dist(rng)});
    } else {
      const int a = qubit_dist(rng);
      int b = qubit_dist(rng);
      while (b == a) b = qubit_dist(rng);
      c.add({kTwoQubit[kind - 4], a, b});
    }
  }
  return c;
}

ControlledPauliInstance controlled_pauli_dqc1(const PauliString& register_pauli,
                                              int quarter_turns) {
  const int n = static_cast<int>(register_pauli.size());
  if (n < 1) throw std::invalid_argument("register must have at least one qubit");
  const int k = ((quarter_turns % 4) + 4) % 4;
  CliffordCircuit c(n + 1);
  c.h(0);
  // Controlled global phase i^k is S^k on the control.
  for (int j = 0; j < k; ++j) c.s(0);
  if (register_pauli.phase() < 0) c.z(0);
  for (int q = 0; q < n; ++q) {
    const int t = q + 1;
    switch (register_pauli.label(static_cast<std::size_t>(q))) {
      case PauliLabel::I: break;
      case PauliLabel::X: c.cnot(0, t); break;
      case PauliLabel::Z: c.cz(0, t); break;
      case PauliLabel::Y:
        // controlled-Y = (I (x) S) CNOT (I (x) S^dagger).
        c.s(t).s(t).s(t).cnot(0, t).s(t);
        break;
    }
  }
  static constexpr Complex kQuarter[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return {std::move(c), dqc1::Unitary(kQuarter[k] * register_pauli.dense())};
}

}  // namespace dqc1sim::clifford
