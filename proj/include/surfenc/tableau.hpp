#pragma once

#include <vector>

#include "surfenc/pauli.hpp"
#include "surfenc/rng.hpp"

namespace surfenc {

// Aaronson-Gottesman style stabilizer simulator.  Rows 0..n-1 are the
// destabilizers, rows n..2n-1 the stabilizers; the initial state is |0...0>
// (destabilizer X_q, stabilizer Z_q).  Gates conjugate every row; Z-basis
// measurement uses the standard random/deterministic branch with row
// products, so states remain in exact canonical-track form throughout.
class StabilizerTableau {
 public:
  explicit StabilizerTableau(int num_qubits);

  static StabilizerTableau zero_state(int num_qubits) {
    return StabilizerTableau(num_qubits);
  }

  int num_qubits() const { return n_; }

  void apply_h(int q);
  void apply_x(int q);
  void apply_z(int q);
  void apply_cnot(int control, int target);
  // Conjugates the state by a Pauli operator (flips anticommuting stabilizer
  // signs).  Used for fault injection.
  void apply_pauli(const PauliString& p);

  // Measures Z on qubit q, collapsing the state; returns +1 or -1.
  int measure_z(int q, SplitRng& rng);
  // Measures every qubit in index order, sampling the joint Z-basis
  // distribution.
  std::vector<int> measure_all_z(SplitRng& rng);

  // Resets one qubit to |0> / |+> (measure, then correct), usable on any
  // entangled state.
  void init_zero(int q, SplitRng& rng);
  void init_plus(int q, SplitRng& rng);

  PauliString stabilizer(int i) const;
  PauliString destabilizer(int i) const;
  std::vector<PauliString> stabilizers() const;

  // Expectation value of a Hermitian Pauli in the stabilized state: +1 or -1
  // when +/-p lies in the stabilizer group, 0 when the projective outcome
  // would be random.
  int expectation(const PauliString& p) const;

  // Unique canonical generating set of the stabilizer group; equal lists
  // (including signs) iff equal states.
  std::vector<PauliString> canonical_stabilizers() const;

  // Canonical generators of the Z-type (X-part-free) subgroup.  Each row R
  // with support S and sign s constrains every Z-basis sample m by
  // prod_{q in S} m_q = s; together these cut out the exact support of the
  // measurement distribution (uniform on that support).
  std::vector<PauliString> z_constraints() const;

 private:
  int n_;
  std::vector<PauliString> rows_;  // 2n rows, destabilizers first

  int find_x_pivot(int q) const;
};

// Gaussian elimination over GF(2) on the symplectic representation, columns
// ordered X_0..X_{n-1}, Z_0..Z_{n-1} (X-part pivots first, lowest qubit index
// first), eliminating above and below each pivot.  Input rows must be
// independent commuting Hermitian Paulis; signs are carried through the row
// products, so the output is the unique reduced basis of the generated group.
std::vector<PauliString> canonicalize(std::vector<PauliString> gens);

}  // namespace surfenc
