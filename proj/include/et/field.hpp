#pragma once

#include <cstdint>

namespace et {

// Working primes for exact rank computation. Both fit in 31 bits, so a
// product of two residues fits in uint64 without overflow.
inline constexpr uint64_t kPrimaryPrime = 2147483647ull;  // 2^31 - 1
inline constexpr uint64_t kConfirmPrime = 2147483629ull;

template <uint64_t P>
struct Fp {
  static constexpr uint64_t prime = P;

  static uint64_t add(uint64_t a, uint64_t b) {
    uint64_t s = a + b;
    return s >= P ? s - P : s;
  }
  static uint64_t sub(uint64_t a, uint64_t b) { return a >= b ? a - b : a + P - b; }
  static uint64_t mul(uint64_t a, uint64_t b) { return (a * b) % P; }

  static uint64_t pow(uint64_t a, uint64_t e) {
    uint64_t r = 1;
    a %= P;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  static uint64_t inv(uint64_t a) { return pow(a, P - 2); }

  // a + f*(P - b) mod P without intermediate overflow; used by row updates.
  static uint64_t fmadd_neg(uint64_t a, uint64_t f, uint64_t b) {
    return (a + f * (P - b)) % P;
  }
};

}  // namespace et
