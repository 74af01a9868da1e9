#pragma once

#include <cstdint>
#include <random>

namespace coq {

/// Deterministic splittable generator. A stream is a 64-bit seed; split()
/// derives an independent child seed from (seed, tag) with SplitMix64 mixing,
/// so a whole experiment tree is fixed by one root seed and no state is shared.
/// Draws use mt19937_64, whose output sequence is fixed by the standard, and
/// our own rejection sampling, so results do not depend on the library's
/// distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(mix(seed)) {}

  std::uint64_t seed() const { return seed_; }
  Rng split(std::uint64_t tag) const { return Rng(mix(seed_ ^ mix(tag + 0x632BE59BD9B4E019ULL))); }

  /// Uniform integer in [lo, hi].
  long uniform(long lo, long hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = span == 0 ? 0 : (~std::uint64_t{0} / span) * span;
    std::uint64_t v = engine_();
    if (span != 0) {
      while (v >= limit) v = engine_();
      v %= span;
    }
    return lo + static_cast<long>(v);
  }

  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace coq
