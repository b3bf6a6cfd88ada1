#pragma once

// Library-independent draws from a 64-bit Mersenne Twister, so seeded output
// does not depend on the standard library's distribution implementations.

#include <cstdint>
#include <random>

namespace minpsc {

/// Uniform integer in [0, n); requires n >= 1.
inline std::uint64_t uniform_index(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % n;
}

/// Uniform double in [0, 1).
inline double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace minpsc
