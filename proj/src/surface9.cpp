#include "surfenc/surface9.hpp"

#include <bit>
#include <stdexcept>

namespace surfenc {
namespace surf9 {

namespace {

PauliString from_support(std::uint16_t support, char p) {
  PauliString out(kNumQubits);
  for (int q = 0; q < kNumQubits; ++q) {
    if (support & (1u << q)) out *= PauliString::single(kNumQubits, q, p);
  }
  return out;
}

int parity_pm(std::uint16_t bits) { return (std::popcount(bits) & 1) ? -1 : +1; }

}  // namespace

std::vector<PauliString> z_stabilizers() {
  std::vector<PauliString> out;
  for (auto s : kZSupports) out.push_back(from_support(s, 'Z'));
  return out;
}

std::vector<PauliString> x_stabilizers() {
  std::vector<PauliString> out;
  for (auto s : kXSupports) out.push_back(from_support(s, 'X'));
  return out;
}

PauliString logical_z() { return from_support(kLogicalZSupport, 'Z'); }
PauliString logical_x() { return from_support(kLogicalXSupport, 'X'); }

CliffordCircuit encoding_circuit() {
  CliffordCircuit c(kNumQubits);
  for (int q = 0; q < kNumQubits; ++q) {
    // |+> on chain positions 1, 4, 6, 9 (the X-type seeds), |0> elsewhere.
    const bool plus = q == 0 || q == 3 || q == 5 || q == 8;
    if (plus) {
      c.init_plus(q);
    } else {
      c.init_zero(q);
    }
  }
  c.marker("step1");
  c.cnot(0, 1);
  c.cnot(3, 2);
  c.cnot(5, 4);
  c.cnot(8, 7);
  c.cnot(3, 4);
  c.cnot(5, 6);
  c.marker("step2");
  c.cnot(2, 1);
  c.cnot(6, 7);
  return c;
}

std::vector<PauliString> step1_generators() {
  const int n = kNumQubits;
  std::vector<PauliString> out;
  for (const char* label :
       {"+X1X2", "+Z1Z2", "+Z3Z4", "+X3X4X5", "+Z4Z5Z6", "+X5X6X7", "+Z6Z7",
        "+Z8Z9", "+X8X9"}) {
    out.push_back(pauli_from_label(label, n));
  }
  return out;
}

std::vector<PauliString> final_generators() {
  std::vector<PauliString> out = z_stabilizers();
  auto xs = x_stabilizers();
  out.insert(out.end(), xs.begin(), xs.end());
  out.push_back(logical_z());
  return out;
}

std::array<int, 4> z_syndrome(const std::array<int, 9>& m) {
  const std::uint16_t neg = outcomes_to_mask(m);
  std::array<int, 4> s;
  for (int i = 0; i < 4; ++i) s[i] = parity_pm(neg & kZSupports[i]);
  return s;
}

int z_syndrome_bits(std::uint16_t neg_mask) {
  int bits = 0;
  for (int i = 0; i < 4; ++i) {
    if (std::popcount(static_cast<unsigned>(neg_mask & kZSupports[i])) & 1) {
      bits |= 1 << i;
    }
  }
  return bits;
}

// Minimum-weight X correction per syndrome; ties resolved toward the chain's
// interior (e.g. X2 rather than X1 for a lone s2), matching the code's
// canonical lookup.  Verified against brute_force_correction up to X-type
// stabilizer equivalence in the tests.
const std::array<std::uint16_t, 16> kCorrectionTable = {
    0x000,  // ( +,+,+,+ ) -> I
    0x040,  // ( -,+,+,+ ) -> X7
    0x002,  // ( +,-,+,+ ) -> X2
    0x020,  // ( -,-,+,+ ) -> X6
    0x080,  // ( +,+,-,+ ) -> X8
    0x0C0,  // ( -,+,-,+ ) -> X7X8
    0x010,  // ( +,-,-,+ ) -> X5
    0x050,  // ( -,-,-,+ ) -> X5X7
    0x004,  // ( +,+,+,- ) -> X3
    0x044,  // ( -,+,+,- ) -> X3X7
    0x006,  // ( +,-,+,- ) -> X2X3
    0x024,  // ( -,-,+,- ) -> X3X6
    0x008,  // ( +,+,-,- ) -> X4
    0x048,  // ( -,+,-,- ) -> X4X7
    0x014,  // ( +,-,-,- ) -> X3X5
    0x028,  // ( -,-,-,- ) -> X4X6
};

std::uint16_t brute_force_correction(int syndrome_bits) {
  if (syndrome_bits < 0 || syndrome_bits > 15) {
    throw std::invalid_argument("brute_force_correction: bad syndrome");
  }
  // Scan by weight, then by mask value, so the answer is deterministic.
  for (int w = 0; w <= kNumQubits; ++w) {
    for (std::uint16_t mask = 0; mask < (1u << kNumQubits); ++mask) {
      if (std::popcount(static_cast<unsigned>(mask)) != w) continue;
      if (z_syndrome_bits(mask) == syndrome_bits) return mask;
    }
  }
  throw std::logic_error("brute_force_correction: unreachable");
}

HardDecodeResult hard_decode(const std::array<int, 9>& m) {
  const std::uint16_t neg = outcomes_to_mask(m);
  const int bits = z_syndrome_bits(neg);
  HardDecodeResult r;
  for (int i = 0; i < 4; ++i) r.syndrome[i] = (bits >> i) & 1 ? -1 : +1;
  r.correction_mask = kCorrectionTable[bits];
  r.logical_value = parity_pm((neg ^ r.correction_mask) & kLogicalZSupport);
  return r;
}

int hard_decode_logical(std::uint16_t neg_mask) {
  const std::uint16_t corrected =
      neg_mask ^ kCorrectionTable[z_syndrome_bits(neg_mask)];
  return parity_pm(corrected & kLogicalZSupport);
}

std::array<int, 4> x_syndrome(const std::array<int, 9>& mx) {
  const std::uint16_t neg = outcomes_to_mask(mx);
  std::array<int, 4> s;
  for (int i = 0; i < 4; ++i) s[i] = parity_pm(neg & kXSupports[i]);
  return s;
}

int x_logical_parity(const std::array<int, 9>& mx) {
  return parity_pm(outcomes_to_mask(mx) & kLogicalXSupport);
}

double fidelity_lower_bound(double p_z, double p_x) {
  if (!(p_z >= 0.0 && p_z <= 1.0) || !(p_x >= 0.0 && p_x <= 1.0)) {
    throw std::invalid_argument("fidelity_lower_bound: inputs must be in [0,1]");
  }
  return p_z + p_x - 1.0;
}

}  // namespace surf9
}  // namespace surfenc
