#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace lexintel {

// Engine for stream `stream` of a run seed. std::seed_seq and mt19937_64 are
// fully specified, so sequences match across platforms.
inline std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return std::mt19937_64(seq);
}

// Unbiased integer in [0, n), n > 0. Unlike std::uniform_int_distribution the
// result does not depend on the standard library.
inline std::uint64_t uniform_below(std::mt19937_64& engine, std::uint64_t n) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = kMax - kMax % n;
  std::uint64_t r = engine();
  while (r >= limit) r = engine();
  return r % n;
}

}  // namespace lexintel
