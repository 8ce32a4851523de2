#pragma once

#include <cstdint>

namespace bmvc {

// SplitMix64, used only to expand a user seed into xoshiro state.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
};

// xoshiro256**. The stream drawn from a given seed is part of the codec
// contract: mask bits and sampling patterns travel as an 8-byte seed, so the
// generator must be bit-stable across platforms and releases.
struct Xoshiro256ss {
  std::uint64_t s[4];

  explicit Xoshiro256ss(std::uint64_t seed) {
    SplitMix64 sm(seed);
    for (auto& w : s) w = sm.next();
  }

  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(s[1] * 5, 7) * 9;
    const std::uint64_t t = s[1] << 17;
    s[2] ^= s[0];
    s[3] ^= s[1];
    s[1] ^= s[2];
    s[0] ^= s[3];
    s[2] ^= t;
    s[3] = rotl(s[3], 45);
    return result;
  }

  // Fair coin: the top bit of the next output.
  std::uint32_t next_bit() { return static_cast<std::uint32_t>(next() >> 63); }

  // Uniform draw in [0, n) without modulo bias: draws above the largest
  // multiple of n are rejected.
  std::uint64_t next_below(std::uint64_t n) {
    const std::uint64_t rem = (0 - n) % n;  // 2^64 mod n
    for (;;) {
      const std::uint64_t v = next();
      if (rem == 0 || v < (0 - rem)) return v % n;
    }
  }

  // Uniform double in [0, 1), 53-bit resolution.
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

}  // namespace bmvc
