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
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "dqc1sim/correlations.hpp"
#include "dqc1sim/dqc1.hpp"

namespace dqc1sim::clifford {

/// Single-qubit Pauli label, numbered sigma_0..sigma_3 = I, Z, X, Y.
enum class PauliLabel : std::uint8_t { I = 0, Z = 1, X = 2, Y = 3 };

char to_char(PauliLabel p);

/// +/- a tensor product of Hermitian single-qubit Paulis, stored as X and Z
/// bit planes (Y = both bits set). Qubit 0 is the slowest tensor factor.
class PauliString {
 public:
  explicit PauliString(std::size_t num_qubits = 0);

  /// Parses e.g. "+XZI", "-Y", "ZI" (sign optional).
  static PauliString parse(std::string_view text);

  /// Z on qubit `q`, identity elsewhere.
  static PauliString single(std::size_t num_qubits, std::size_t q, PauliLabel label);

  std::size_t size() const { return n_; }
  int phase() const { return negative_ ? -1 : 1; }
  void set_phase(int phase);

  PauliLabel label(std::size_t q) const;
  void set_label(std::size_t q, PauliLabel label);

  bool x_bit(std::size_t q) const { return (x_[q / 64] >> (q % 64)) & 1U; }
  bool z_bit(std::size_t q) const { return (z_[q / 64] >> (q % 64)) & 1U; }

  /// Number of qubits carrying a non-identity label.
  std::size_t weight() const;

  std::string to_string() const;

  /// Dense 2^n x 2^n matrix including the sign.
  Matrix dense() const;

  bool operator==(const PauliString& other) const = default;

 private:
  friend class PauliConjugator;
  std::size_t n_;
  bool negative_ = false;
  std::vector<std::uint64_t> x_;
  std::vector<std::uint64_t> z_;
};

enum class GateKind { H, S, CZ, CNOT, X, Z };

const char* to_string(GateKind kind);
bool is_two_qubit(GateKind kind);

struct Gate {
  GateKind kind = GateKind::H;
  /// Target for one-qubit gates; (control, target) for CNOT; the pair for CZ.
  int q0 = 0;
  int q1 = -1;

  bool operator==(const Gate& other) const = default;
};

class CliffordCircuit {
 public:
  explicit CliffordCircuit(int num_qubits);

  /// Throws std::invalid_argument on out-of-range or repeated qubits.
  CliffordCircuit& add(Gate gate);
  CliffordCircuit& h(int q) { return add({GateKind::H, q}); }
  CliffordCircuit& s(int q) { return add({GateKind::S, q}); }
  CliffordCircuit& x(int q) { return add({GateKind::X, q}); }
  CliffordCircuit& z(int q) { return add({GateKind::Z, q}); }
  CliffordCircuit& cz(int a, int b) { return add({GateKind::CZ, a, b}); }
  CliffordCircuit& cnot(int c, int t) { return add({GateKind::CNOT, c, t}); }

  int num_qubits() const { return n_; }
  const std::vector<Gate>& gates() const { return gates_; }

  /// Gate sequence implementing the inverse unitary.
  CliffordCircuit inverse() const;

 private:
  int n_;
  std::vector<Gate> gates_;
};

/// g P g^dagger.
PauliString conjugate_gate(const Gate& gate, PauliString p);

/// Conjugation by the whole circuit, gates applied in order.
PauliString propagate(const CliffordCircuit& circuit, PauliString p);

/// Dense unitary of a gate or circuit on `num_qubits` qubits.
Matrix gate_matrix(const Gate& gate, int num_qubits);
Matrix to_dense(const CliffordCircuit& circuit);

/// <X>, <Y> of the control (qubit 0) at the output of a DQC1 circuit whose
/// input is (I + alpha Z (x) I) / 2^{n+1}, computed by propagating the Z
/// term. Linear in the gate count.
dqc1::PauliExpectations dqc1_clifford_expectations(const CliffordCircuit& circuit, double alpha);

/// Dense output state (I + alpha W (Z (x) I) W^dagger) / 2^{n+1} with
/// subsystems [1, n-1]. Small circuits only.
qmath::DensityMatrix dense_dqc1_output(const CliffordCircuit& circuit, double alpha = 1.0);

struct LocalRotation {
  int qubit = 0;
  PauliLabel from = PauliLabel::I;
  /// I or Z after rotation.
  PauliLabel to = PauliLabel::I;
  /// Gates (applied in order) that perform the rotation; empty if none.
  std::vector<GateKind> gates;
};

struct DenseDiscordCheck {
  double discord_rc = 0.0;
  double discord_cr = 0.0;
  std::string discord_cr_method;
  bool propagation_matches_dense = false;
};

struct ZeroDiscordReport {
  PauliString propagated;
  std::vector<LocalRotation> rotations;
  /// propagated after the local rotations: labels only I or Z.
  PauliString diagonal_form;
  bool structurally_diagonal = false;
  std::optional<DenseDiscordCheck> dense;
  bool verified = false;
};

inline constexpr double kZeroDiscordTol = 1e-6;
inline constexpr int kDenseCheckMaxQubits = 4;

/// Propagates Z on the control, rotates each qubit's label into {I, Z} and,
/// for at most four qubits, cross-checks both discords of the dense output.
ZeroDiscordReport verify_zero_discord(const CliffordCircuit& circuit);

/// Uniformly random gates from the gate set.
CliffordCircuit random_circuit(int num_qubits, int num_gates, std::mt19937_64& rng);

/// DQC1 circuit H(0) then controlled-(i^quarter_turns P) where `register_pauli`
/// acts on qubits 1..n. Returned together with the dense register unitary.
struct ControlledPauliInstance {
  CliffordCircuit circuit;
  dqc1::Unitary register_unitary;
};
ControlledPauliInstance controlled_pauli_dqc1(const PauliString& register_pauli,
                                              int quarter_turns);

}  // namespace dqc1sim::clifford
