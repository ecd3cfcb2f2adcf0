// Deterministic 64-bit PRNG (splitmix64). Output sequences are part of the
// CLI's reproducibility contract, so the generator is pinned here rather
// than delegated to the standard library's unspecified engines.
#pragma once

#include <cstdint>

namespace sd {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform-enough integer in [lo, hi]; modulo bias is irrelevant for
  // sampling small coefficients and determinism is what matters.
  long below(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::uint64_t state_;
};

}  // namespace sd
