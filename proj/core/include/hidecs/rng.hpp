#pragma once

#include <cstdint>

namespace hidecs {

// SplitMix64 with the standard constants. Every randomized routine in this
// project draws from this generator so that identical seeds reproduce
// identical streams on any platform; see docs/random.md for the contract.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n) via 128-bit multiply-shift (no rejection loop).
  std::uint64_t next_below(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
  }

  // Uniform double in [0, 1) with 53 random bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  bool next_bool() { return (next_u64() >> 63) != 0; }

 private:
  std::uint64_t state_;
};

// One-shot mix, used to derive independent child seeds.
inline std::uint64_t mix_seed(std::uint64_t seed) {
  return SplitMix64(seed).next_u64();
}

}  // namespace hidecs
