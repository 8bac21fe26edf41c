#pragma once

#include <cstdint>
#include <random>

namespace ptcomp {

// Seeded engine used everywhere a run must be reproducible. Draws are
// derived directly from engine output (not std distributions) so seeded
// results are identical across standard library implementations.
using Rng = std::mt19937_64;

// Uniform integer in [0, bound), bound > 0. Lemire's multiply-shift with
// rejection, unbiased.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  unsigned __int128 product = static_cast<unsigned __int128>(rng()) * bound;
  auto low = static_cast<std::uint64_t>(product);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      product = static_cast<unsigned __int128>(rng()) * bound;
      low = static_cast<std::uint64_t>(product);
    }
  }
  return static_cast<std::uint64_t>(product >> 64);
}

// Uniform double in [0, 1) with 53 random bits.
inline double uniform_unit(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

// Fisher-Yates shuffle driven by uniform_below.
template <class RandomIt>
void shuffle(RandomIt first, RandomIt last, Rng& rng) {
  const auto n = static_cast<std::uint64_t>(last - first);
  for (std::uint64_t i = n; i > 1; --i) {
    const auto j = uniform_below(rng, i);
    std::swap(first[i - 1], first[j]);
  }
}

}  // namespace ptcomp
