#pragma once

#include <array>
#include <cstdint>

namespace surfenc {

// Probabilities that one nine-qubit block's logical Z value is +1 / -1.
// Always kept normalized (p_plus + p_minus == 1).
struct Posterior {
  double p_plus = 1.0;
  double p_minus = 0.0;

  // Exact tie decodes to -1 (prefer reporting an error over hiding one).
  int verdict() const { return p_plus > p_minus ? +1 : -1; }
};

namespace softdec {

// The sixteen Z-basis codeword sign patterns with logical value z, as 9-bit
// masks (bit q set = qubit q+1 is -1).  A pattern is valid iff all four
// Z-stabilizer parities are +1 and the Z_L parity equals z; the free choices
// are the signs of qubits 1, 2, 5, 8.  Index: [0] for z = +1, [1] for -1.
const std::array<std::array<std::uint16_t, 16>, 2>& codeword_masks();

// Soft-decision decode of one block.  priors[q] is the per-wire belief that
// wire q's ideal codeword sign is +1/-1; the result is the posterior of the
// block's logical Z given the four stabilizer constraints, i.e.
//   R(z) = sum over codeword patterns with logical z of
//          prod_q (pattern_q == +1 ? priors[q].p_plus : priors[q].p_minus)
// normalized over z.  Throws std::domain_error if both sums are zero (only
// possible for certain-but-contradictory priors).
Posterior block_posterior(const std::array<Posterior, 9>& priors);

// Literal 512-term reference: enumerates all sign assignments, filters by
// the five parity constraints.  Kept deliberately naive as the correctness
// oracle for block_posterior.
Posterior block_posterior_reference(const std::array<Posterior, 9>& priors);

// Level-1 soft decoding: measured sample m (+1/-1 per wire) with a symmetric
// per-wire flip probability p_e gives priors P(sign = m_q) = 1 - p_e.
// Requires p_e in (0, 0.5).
Posterior level1_posterior(const std::array<int, 9>& m, double p_e);
// Hot-path variant on an outcome bit mask (bit q = wire q measured -1).
Posterior level1_posterior_mask(std::uint16_t neg_mask, double p_e);

// Level-2 soft decoding: feeds nine level-1 block posteriors through the same
// kernel (the outer code has identical structure) and takes the verdict;
// p_plus == p_minus resolves to -1 by convention (report the error).
struct Level2Decision {
  Posterior posterior;
  int verdict;
};
Level2Decision level2_decode(const std::array<Posterior, 9>& blocks);

}  // namespace softdec
}  // namespace surfenc
