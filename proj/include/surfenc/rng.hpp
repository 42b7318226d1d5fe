#pragma once

#include <cstdint>

namespace surfenc {

// Counter-based splittable RNG (SplitMix64 finalizer on a keyed counter).
//
// Reproducibility contract: the value stream is a pure function of
// (seed, stream, tag, counter), so shard workers can be handed independent
// generators keyed by shot index and results never depend on thread count or
// execution order.  Distinct `tag`s give decorrelated streams for the same
// (seed, stream) pair; the simulation uses separate tags for fault sampling
// and for measurement randomness so that two backends sharing a seed consume
// identical fault draws regardless of how much measurement randomness each
// needs.
struct SplitRng {
  static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

  std::uint64_t key = 0;
  std::uint64_t counter = 0;

  static std::uint64_t mix(std::uint64_t v) {
    v ^= v >> 30;
    v *= 0xbf58476d1ce4e5b9ULL;
    v ^= v >> 27;
    v *= 0x94d049bb133111ebULL;
    v ^= v >> 31;
    return v;
  }

  SplitRng() = default;

  SplitRng(std::uint64_t seed, std::uint64_t stream, std::uint64_t tag = 0) {
    key = mix(seed + kGamma);
    key = mix(key ^ (stream + 0xd1b54a32d192ed03ULL));
    key = mix(key ^ (tag + 0x8cb92ba72f3d8dd7ULL));
  }

  std::uint64_t next() { return mix(key + (++counter) * kGamma); }

  // Uniform double in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform01() < p; }

  // Unbiased-enough integer in [0, n) via 128-bit multiply-shift.
  std::uint32_t below(std::uint32_t n) {
    return static_cast<std::uint32_t>(
        (static_cast<unsigned __int128>(next()) * n) >> 64);
  }
};

}  // namespace surfenc
