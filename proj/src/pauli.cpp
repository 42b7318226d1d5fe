#include "surfenc/pauli.hpp"

#include <bit>
#include <cctype>
#include <stdexcept>

namespace surfenc {

PauliString::PauliString(int num_qubits) : n(num_qubits) {
  if (num_qubits < 1 || num_qubits > kMaxQubits) {
    throw std::invalid_argument("PauliString: qubit count out of range");
  }
}

PauliString PauliString::single(int num_qubits, int qubit, char p) {
  PauliString out(num_qubits);
  if (qubit < 0 || qubit >= num_qubits) {
    throw std::invalid_argument("PauliString::single: qubit out of range");
  }
  switch (p) {
    case 'I':
      break;
    case 'X':
      out.toggle_x(qubit);
      break;
    case 'Y':
      out.toggle_x(qubit);
      out.toggle_z(qubit);
      out.phase = 1;  // Y = i X Z
      break;
    case 'Z':
      out.toggle_z(qubit);
      break;
    default:
      throw std::invalid_argument("PauliString::single: unknown Pauli letter");
  }
  return out;
}

void PauliString::set_x(int q, bool v) {
  const std::uint64_t m = 1ULL << (q & 63);
  if (v) {
    x[q >> 6] |= m;
  } else {
    x[q >> 6] &= ~m;
  }
}

void PauliString::set_z(int q, bool v) {
  const std::uint64_t m = 1ULL << (q & 63);
  if (v) {
    z[q >> 6] |= m;
  } else {
    z[q >> 6] &= ~m;
  }
}

bool PauliString::is_identity_bits() const {
  for (int w = 0; w < kPauliWords; ++w) {
    if (x[w] | z[w]) return false;
  }
  return true;
}

int PauliString::weight() const {
  int count = 0;
  for (int w = 0; w < kPauliWords; ++w) {
    count += std::popcount(x[w] | z[w]);
  }
  return count;
}

int PauliString::y_count() const {
  int count = 0;
  for (int w = 0; w < kPauliWords; ++w) {
    count += std::popcount(x[w] & z[w]);
  }
  return count;
}

int PauliString::sign() const {
  if (!is_hermitian()) {
    throw std::logic_error("PauliString::sign: operator is not Hermitian");
  }
  // i^phase relative to i^{y_count} absorbed into the Y letters.
  return ((phase - y_count()) & 3) == 0 ? +1 : -1;
}

void PauliString::set_sign(int s) {
  if (s != +1 && s != -1) {
    throw std::invalid_argument("PauliString::set_sign: sign must be +1 or -1");
  }
  phase = static_cast<std::uint8_t>((y_count() + (s == +1 ? 0 : 2)) & 3);
}

PauliString& PauliString::operator*=(const PauliString& rhs) {
  if (n != rhs.n) {
    throw std::invalid_argument("PauliString: size mismatch in product");
  }
  int crossings = 0;
  for (int w = 0; w < kPauliWords; ++w) {
    crossings += std::popcount(z[w] & rhs.x[w]);
    x[w] ^= rhs.x[w];
    z[w] ^= rhs.z[w];
  }
  phase = static_cast<std::uint8_t>((phase + rhs.phase + 2 * crossings) & 3);
  return *this;
}

bool PauliString::commutes_with(const PauliString& other) const {
  int anti = 0;
  for (int w = 0; w < kPauliWords; ++w) {
    anti += std::popcount(x[w] & other.z[w]);
    anti += std::popcount(z[w] & other.x[w]);
  }
  return (anti & 1) == 0;
}

void PauliString::conj_h(int q) {
  // H: X <-> Z, Y -> -Y.  Swapping the bits turns X^x Z^z into X^z Z^x; when
  // both bits are set the reorder Z X -> -(X Z) costs a sign.
  const bool bx = x_bit(q);
  const bool bz = z_bit(q);
  if (bx != bz) {
    toggle_x(q);
    toggle_z(q);
  } else if (bx && bz) {
    phase = (phase + 2) & 3;
  }
}

void PauliString::conj_x(int q) {
  if (z_bit(q)) phase = (phase + 2) & 3;  // X: Z -> -Z, Y -> -Y
}

void PauliString::conj_z(int q) {
  if (x_bit(q)) phase = (phase + 2) & 3;  // Z: X -> -X, Y -> -Y
}

void PauliString::conj_cnot(int control, int target) {
  // X_c -> X_c X_t, Z_t -> Z_c Z_t; in the i^phase X^x Z^z representation the
  // bit updates are phase-free (any reorder signs are absorbed by the Y = iXZ
  // bookkeeping).
  if (x_bit(control)) toggle_x(target);
  if (z_bit(target)) toggle_z(control);
}

std::string PauliString::str() const {
  std::string out(sign() > 0 ? "+" : "-");
  bool any = false;
  for (int q = 0; q < n; ++q) {
    const bool bx = x_bit(q);
    const bool bz = z_bit(q);
    if (!bx && !bz) continue;
    any = true;
    out += bx ? (bz ? 'Y' : 'X') : 'Z';
    out += std::to_string(q + 1);
  }
  if (!any) out += 'I';
  return out;
}

PauliString pauli_from_label(const std::string& label, int num_qubits) {
  PauliString out(num_qubits);
  std::size_t i = 0;
  int sign = +1;
  if (i < label.size() && (label[i] == '+' || label[i] == '-')) {
    sign = label[i] == '+' ? +1 : -1;
    ++i;
  }
  if (i < label.size() && label[i] == 'I' && i + 1 == label.size()) {
    out.set_sign(sign);
    return out;
  }
  if (i == label.size()) {
    throw std::invalid_argument("pauli_from_label: empty operator");
  }
  while (i < label.size()) {
    const char p = label[i];
    if (p != 'X' && p != 'Y' && p != 'Z') {
      throw std::invalid_argument("pauli_from_label: expected X/Y/Z at '" +
                                  label.substr(i) + "'");
    }
    ++i;
    std::size_t start = i;
    while (i < label.size() && std::isdigit(static_cast<unsigned char>(label[i]))) {
      ++i;
    }
    if (start == i) {
      throw std::invalid_argument("pauli_from_label: missing qubit index");
    }
    const int q = std::stoi(label.substr(start, i - start));
    if (q < 1 || q > num_qubits) {
      throw std::invalid_argument("pauli_from_label: qubit index out of range");
    }
    if (out.x_bit(q - 1) || out.z_bit(q - 1)) {
      throw std::invalid_argument("pauli_from_label: duplicate qubit index");
    }
    out *= PauliString::single(num_qubits, q - 1, p);
  }
  out.set_sign(sign);
  return out;
}

}  // namespace surfenc
