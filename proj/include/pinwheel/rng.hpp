#pragma once

#include <cstdint>

namespace pinwheel {

// Counter-based deterministic generator (splitmix64 finalizer).
// draw(seed, ctr) depends only on its arguments, so coefficients can be
// generated in any order -- or in parallel -- with identical results.

inline std::uint64_t splitmix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xBF58476D1CE4B5B9ull;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBull;
  x ^= x >> 31;
  return x;
}

inline std::uint64_t draw_u64(std::uint64_t seed, std::uint64_t counter) {
  return splitmix64(seed + (counter + 1) * 0x9E3779B97F4A7C15ull);
}

// Uniform in [-1, 1), 53 mantissa bits.
inline double draw_symmetric(std::uint64_t seed, std::uint64_t counter) {
  const double u = static_cast<double>(draw_u64(seed, counter) >> 11) * 0x1.0p-53;
  return 2.0 * u - 1.0;
}

}  // namespace pinwheel
