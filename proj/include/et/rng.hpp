#pragma once

#include <cstdint>

namespace et {

// SplitMix64. Self-contained so that streams are bit-identical across
// platforms and standard library versions.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n). Modulo bias is < 2^-32 for the n used here.
  uint64_t below(uint64_t n) { return next() % n; }

  // Uniform nonzero field element in [1, p).
  uint64_t nonzero_mod(uint64_t p) { return 1 + next() % (p - 1); }

 private:
  uint64_t state_;
};

// Decorrelated child seed for stream k of a seeded run.
inline uint64_t derive_seed(uint64_t seed, uint64_t k) {
  SplitMix64 g(seed ^ (0x9e3779b97f4a7c15ull * (k + 1)));
  return g.next();
}

}  // namespace et
