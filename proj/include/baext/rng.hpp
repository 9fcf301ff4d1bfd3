#pragma once

#include <cstdint>

namespace baext {

// Deterministic 64-bit PRNG (splitmix64 core). We roll our own instead of
// using <random> engines + distributions because distribution output is
// implementation-defined and the whole simulator must replay bit-identically
// from a seed.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform value in [0, bound). bound must be nonzero.
  uint64_t next_below(uint64_t bound) {
    // Rejection sampling over the largest multiple of bound.
    uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      uint64_t r = next_u64();
      if (r >= threshold) return r % bound;
    }
  }

  // Uniform k-bit value, k in [0, 64].
  uint64_t next_bits(int k) {
    if (k == 0) return 0;
    uint64_t r = next_u64();
    return (k >= 64) ? r : (r & ((uint64_t{1} << k) - 1));
  }

  bool next_bool() { return next_u64() & 1; }

  // Derives an independent stream; used to fork one RNG per party from the
  // master seed.
  Rng fork(uint64_t stream) {
    uint64_t s = next_u64() ^ (stream * 0xd6e8feb86659fd93ULL + 0xa3ec647659359acdULL);
    return Rng(s);
  }

 private:
  uint64_t state_;
};

}  // namespace baext
