#include "surfenc/softdec.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "surfenc/surface9.hpp"

namespace surfenc {
namespace softdec {

namespace {

std::array<std::array<std::uint16_t, 16>, 2> build_codeword_masks() {
  std::array<std::array<std::uint16_t, 16>, 2> table{};
  for (int zi = 0; zi < 2; ++zi) {
    const int nz = zi;  // 0: logical +1, 1: logical -1
    int count = 0;
    // Free signs on qubits 1, 2, 5, 8; the stabilizer and logical parities
    // determine the rest (qubit labels 1-based, bits 0-based).
    for (int f = 0; f < 16; ++f) {
      const int n1 = f & 1;
      const int n2 = (f >> 1) & 1;
      const int n5 = (f >> 2) & 1;
      const int n8 = (f >> 3) & 1;
      const int n3 = nz ^ n1 ^ n2;  // Z1Z2Z3 = z
      const int n4 = n3;            // Z3Z4
      const int n6 = n1 ^ n2 ^ n5;  // Z1Z2Z5Z6
      const int n7 = n6;            // Z6Z7
      const int n9 = n4 ^ n5 ^ n8;  // Z4Z5Z8Z9
      const std::uint16_t mask = static_cast<std::uint16_t>(
          n1 | (n2 << 1) | (n3 << 2) | (n4 << 3) | (n5 << 4) | (n6 << 5) |
          (n7 << 6) | (n8 << 7) | (n9 << 8));
      table[zi][count++] = mask;
    }
  }
  return table;
}

}  // namespace

const std::array<std::array<std::uint16_t, 16>, 2>& codeword_masks() {
  static const auto table = build_codeword_masks();
  return table;
}

Posterior block_posterior(const std::array<Posterior, 9>& priors) {
  for (const auto& pr : priors) {
    if (!(pr.p_plus >= 0.0) || !(pr.p_minus >= 0.0)) {
      throw std::invalid_argument("block_posterior: negative prior");
    }
    if (std::abs(pr.p_plus + pr.p_minus - 1.0) > 1e-9) {
      throw std::invalid_argument("block_posterior: prior not normalized");
    }
  }
  const auto& masks = codeword_masks();
  double r[2] = {0.0, 0.0};
  for (int zi = 0; zi < 2; ++zi) {
    for (const std::uint16_t mask : masks[zi]) {
      double term = 1.0;
      for (int q = 0; q < 9; ++q) {
        term *= (mask >> q) & 1 ? priors[q].p_minus : priors[q].p_plus;
      }
      r[zi] += term;
    }
  }
  const double total = r[0] + r[1];
  if (total <= 0.0) {
    throw std::domain_error("block_posterior: zero posterior mass");
  }
  return {r[0] / total, r[1] / total};
}

Posterior block_posterior_reference(const std::array<Posterior, 9>& priors) {
  double r[2] = {0.0, 0.0};
  for (std::uint16_t mask = 0; mask < 512; ++mask) {
    bool valid = true;
    for (const auto sup : surf9::kZSupports) {
      if (std::popcount(static_cast<unsigned>(mask & sup)) & 1) {
        valid = false;
        break;
      }
    }
    if (!valid) continue;
    const int zi =
        std::popcount(static_cast<unsigned>(mask & surf9::kLogicalZSupport)) & 1;
    double term = 1.0;
    for (int q = 0; q < 9; ++q) {
      term *= (mask >> q) & 1 ? priors[q].p_minus : priors[q].p_plus;
    }
    r[zi] += term;
  }
  const double total = r[0] + r[1];
  if (total <= 0.0) {
    throw std::domain_error("block_posterior_reference: zero posterior mass");
  }
  return {r[0] / total, r[1] / total};
}

Posterior level1_posterior(const std::array<int, 9>& m, double p_e) {
  return level1_posterior_mask(surf9::outcomes_to_mask(m), p_e);
}

Posterior level1_posterior_mask(std::uint16_t neg_mask, double p_e) {
  if (!(p_e > 0.0 && p_e < 0.5)) {
    throw std::invalid_argument("level1_posterior: p_e must be in (0, 0.5)");
  }
  // P(codeword sign pattern c | sample m) ~ p_e^d (1-p_e)^(9-d) with d the
  // Hamming distance; sum over the 16 patterns of each logical class.
  double pow_pe[10];
  pow_pe[0] = 1.0;
  const double ratio = p_e / (1.0 - p_e);
  for (int i = 1; i <= 9; ++i) pow_pe[i] = pow_pe[i - 1] * ratio;
  const auto& masks = codeword_masks();
  double r[2] = {0.0, 0.0};
  for (int zi = 0; zi < 2; ++zi) {
    for (const std::uint16_t mask : masks[zi]) {
      r[zi] += pow_pe[std::popcount(static_cast<unsigned>(mask ^ neg_mask))];
    }
  }
  const double total = r[0] + r[1];
  return {r[0] / total, r[1] / total};
}

Level2Decision level2_decode(const std::array<Posterior, 9>& blocks) {
  Level2Decision d;
  d.posterior = block_posterior(blocks);
  d.verdict = d.posterior.verdict();
  return d;
}

}  // namespace softdec
}  // namespace surfenc
