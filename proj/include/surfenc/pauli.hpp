#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace surfenc {

// Hard cap on qubit count so Pauli strings fit in fixed storage (3x 64-bit
// words per X/Z half).  The largest object in this project is the level-2
// preparation with error-detection ancillas: 81 data + 2*9*3 ancilla = 135
// wires, comfortably below the cap.
inline constexpr int kMaxQubits = 192;
inline constexpr int kPauliWords = 3;

// n-qubit Pauli operator  i^phase * prod_q X_q^{x_q} Z_q^{z_q}  with the
// convention Y = i*X*Z (so phase parity equals the Y-count parity for any
// Hermitian operator).  Multiplication tracks phase mod 4:
//   (i^a X^{x1}Z^{z1}) (i^b X^{x2}Z^{z2})
//     = i^{a+b+2*|z1&x2|} X^{x1^x2} Z^{z1^z2}
// because each Z passing an X contributes -1.
struct PauliString {
  int n = 0;
  std::array<std::uint64_t, kPauliWords> x{};
  std::array<std::uint64_t, kPauliWords> z{};
  std::uint8_t phase = 0;  // exponent of i, mod 4

  PauliString() = default;
  explicit PauliString(int num_qubits);

  static PauliString identity(int num_qubits) { return PauliString(num_qubits); }
  // p is one of 'X', 'Y', 'Z' ('I' gives the identity).
  static PauliString single(int num_qubits, int qubit, char p);

  bool x_bit(int q) const { return (x[q >> 6] >> (q & 63)) & 1; }
  bool z_bit(int q) const { return (z[q >> 6] >> (q & 63)) & 1; }
  void set_x(int q, bool v);
  void set_z(int q, bool v);
  void toggle_x(int q) { x[q >> 6] ^= 1ULL << (q & 63); }
  void toggle_z(int q) { z[q >> 6] ^= 1ULL << (q & 63); }

  bool is_identity_bits() const;  // ignores phase
  int weight() const;

  // Number of qubits carrying Y (x and z both set); phase parity must match
  // this for Hermitian operators.
  int y_count() const;
  bool is_hermitian() const { return ((phase ^ y_count()) & 1) == 0; }

  // +1/-1 for a Hermitian operator; throws std::logic_error otherwise.
  int sign() const;
  void set_sign(int s);
  void negate() { phase = (phase + 2) & 3; }

  PauliString& operator*=(const PauliString& rhs);
  friend PauliString operator*(PauliString lhs, const PauliString& rhs) {
    lhs *= rhs;
    return lhs;
  }

  bool commutes_with(const PauliString& other) const;

  bool operator==(const PauliString& other) const = default;

  // In-place conjugation by Clifford gates, E -> U E U^dag.  These are the
  // single primitives shared by the stabilizer tableau (rows are conjugated
  // by every applied gate) and by error propagation.
  void conj_h(int q);
  void conj_x(int q);
  void conj_z(int q);
  void conj_cnot(int control, int target);

  // "+X1X2", "-Z3", "+I" (1-based qubit labels, ascending).  Requires
  // Hermitian; throws otherwise.
  std::string str() const;
};

// Parses the str() format; accepts an optional leading +/- and labels like
// X1Z4Y7 in any order.  Throws std::invalid_argument on malformed input or
// qubit index out of [1, num_qubits].
PauliString pauli_from_label(const std::string& label, int num_qubits);

}  // namespace surfenc
