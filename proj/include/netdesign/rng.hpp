#pragma once

#include <cstdint>
#include <random>

namespace netdesign {

using Rng = std::mt19937_64;

// Bounded draws implemented directly on the engine output so that a given
// seed produces the same stream on every platform (std distributions do not
// guarantee that).
inline std::uint64_t rand_below(Rng& rng, std::uint64_t n) {
  // rejection sampling, unbiased
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

inline int rand_int(Rng& rng, int lo, int hi) {  // inclusive range
  return lo + static_cast<int>(rand_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

inline double rand_unit(Rng& rng) {  // [0, 1)
  return (rng() >> 11) * 0x1.0p-53;
}

// Derives an independent stream seed (splitmix64 step).
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace netdesign
