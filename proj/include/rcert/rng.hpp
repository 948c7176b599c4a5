#ifndef RCERT_RNG_HPP
#define RCERT_RNG_HPP

#include <cstdint>

#include "rcert/rational.hpp"

namespace rcert {

/// SplitMix64: deterministic, platform-independent 64-bit stream. Used for
/// all sampling and trial seeding so reports are byte-reproducible.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, n).
  uint64_t below(uint64_t n) { return n ? next() % n : 0; }

  /// Uniform signed integer in [lo, hi].
  long range(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<uint64_t>(hi - lo + 1)));
  }

  bool coin() { return (next() & 1u) != 0; }

  /// Exact uniform rational k/2^53, k drawn from the top 53 bits.
  Rat unit_rational() {
    const uint64_t k = next() >> 11;
    return Rat(static_cast<long long>(k)) / Rat(9007199254740992LL);  // 2^53
  }

 private:
  uint64_t state_;
};

/// Per-trial stream derivation: trial i of master seed s runs on
/// SplitMix64(derive_seed(s, i)). Documented splitting rule of the trial
/// orchestrator; keeps concurrent trials decoupled.
inline uint64_t derive_seed(uint64_t master, uint64_t trial_index) {
  SplitMix64 mix(master ^ (0xA0761D6478BD642FULL * (trial_index + 1)));
  return mix.next();
}

}  // namespace rcert

#endif  // RCERT_RNG_HPP
