#pragma once

// Seeded randomness with results that do not depend on the standard library
// implementation (std::uniform_int_distribution and std::shuffle are not
// portable across vendors).

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace lastsep {

using Rng = std::mt19937_64;

// Uniform integer in [0, bound), bound > 0, by rejection.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  // 2^64 mod bound values at the bottom of the range would be over-represented.
  const std::uint64_t threshold = (std::uint64_t{0} - bound) % bound;
  for (;;) {
    const std::uint64_t x = rng();
    if (x >= threshold) return x % bound;
  }
}

template <typename T>
void shuffle(std::span<T> items, Rng& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(uniform_below(rng, i));
    std::swap(items[i - 1], items[j]);
  }
}

}  // namespace lastsep
