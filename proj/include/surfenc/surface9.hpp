#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "surfenc/circuit.hpp"
#include "surfenc/pauli.hpp"

namespace surfenc {

// Distance-three nine-qubit rotated surface code on a 1-D qubit chain
// (qubits numbered 1..9 in labels, 0..8 in code).  Stabilizer supports as
// 9-bit masks, bit q = qubit q+1:
//
//   Z stabilizers: Z6Z7, Z1Z2Z5Z6, Z4Z5Z8Z9, Z3Z4
//   X stabilizers: X1X2, X2X3X4X5, X5X6X7X8, X8X9
//   logical:       Z_L = Z1Z2Z3,  X_L = X1X6X7
namespace surf9 {

inline constexpr int kNumQubits = 9;
inline constexpr int kNumStabilizers = 4;

inline constexpr std::array<std::uint16_t, 4> kZSupports = {
    0b0'0110'0000,  // Z6Z7
    0b0'0011'0011,  // Z1Z2Z5Z6
    0b1'1001'1000,  // Z4Z5Z8Z9
    0b0'0000'1100,  // Z3Z4
};

inline constexpr std::array<std::uint16_t, 4> kXSupports = {
    0b0'0000'0011,  // X1X2
    0b0'0001'1110,  // X2X3X4X5
    0b0'1111'0000,  // X5X6X7X8
    0b1'1000'0000,  // X8X9
};

inline constexpr std::uint16_t kLogicalZSupport = 0b0'0000'0111;  // Z1Z2Z3
inline constexpr std::uint16_t kLogicalXSupport = 0b0'0110'0001;  // X1X6X7

std::vector<PauliString> z_stabilizers();
std::vector<PauliString> x_stabilizers();
PauliString logical_z();
PauliString logical_x();

// Measurement-free encoding circuit for |0>_L on the nine-wire chain:
// |+> on {1,4,6,9} and |0> elsewhere, six first-round CNOTs
// (1->2, 4->3, 6->5, 9->8, then 4->5, 6->7), then the final round 3->2, 7->8.
// Every CNOT acts on chain-adjacent qubits and each gate round is annotated
// with a marker (`step1`, `step2`).
CliffordCircuit encoding_circuit();

// Stabilizer sets after the first CNOT round / after the full circuit, for
// checking an implementation against the intended intermediate state.
std::vector<PauliString> step1_generators();
std::vector<PauliString> final_generators();

// --- Z-basis readout decoding ------------------------------------------------

// Outcome bit masks: bit q set means qubit q+1 measured -1.
inline std::uint16_t outcomes_to_mask(const std::array<int, 9>& m) {
  std::uint16_t mask = 0;
  for (int q = 0; q < 9; ++q) {
    if (m[q] < 0) mask |= static_cast<std::uint16_t>(1u << q);
  }
  return mask;
}

// Four Z-stabilizer parities of a Z-basis sample, each +1/-1.
std::array<int, 4> z_syndrome(const std::array<int, 9>& m);
// Same, packed: bit i set means stabilizer i has parity -1.
int z_syndrome_bits(std::uint16_t neg_mask);

// Syndrome -> X-correction lookup (the code's minimum-weight table; masks of
// qubits whose outcome is flipped).  Index = packed syndrome bits.
extern const std::array<std::uint16_t, 16> kCorrectionTable;

// Independent minimum-weight decoder used to cross-check the table: scans all
// 512 X-error patterns for matching syndrome, minimum weight, ties broken by
// lowest mask value.
std::uint16_t brute_force_correction(int syndrome_bits);

struct HardDecodeResult {
  std::array<int, 4> syndrome;     // +1/-1 per Z stabilizer
  std::uint16_t correction_mask;   // X correction applied to the outcomes
  int logical_value;               // +1/-1, Z_L parity after correction
};

// Table-driven hard decode of a single nine-qubit Z-basis sample.
HardDecodeResult hard_decode(const std::array<int, 9>& m);
// Hot-path variant: returns the corrected Z_L parity (+1/-1) only.
int hard_decode_logical(std::uint16_t neg_mask);

// --- X-basis readout ---------------------------------------------------------

// Four X-stabilizer parities of an X-basis sample (outcomes of measuring
// every qubit in the X basis), each +1/-1.
std::array<int, 4> x_syndrome(const std::array<int, 9>& mx);
// X_L parity of an X-basis sample.
int x_logical_parity(const std::array<int, 9>& mx);

// --- State fidelity bound ----------------------------------------------------

// Lower bound on the encoded-state fidelity from the probabilities of trivial
// syndrome + correct logical value in the Z and X bases: F >= p_z + p_x - 1.
// Inputs must lie in [0, 1].
double fidelity_lower_bound(double p_z, double p_x);

}  // namespace surf9
}  // namespace surfenc
