#ifndef SKEWEX_RANDOM_HPP
#define SKEWEX_RANDOM_HPP

// Draws that depend only on the raw mt19937_64 stream, so the same seed
// gives the same values with every standard library.

#include <cstdint>
#include <random>

namespace skewex {

/// Uniform-ish integer in [lo, hi].
inline long draw_between(std::mt19937_64& rng, long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(rng() % span);
}

inline bool draw_bool(std::mt19937_64& rng) { return (rng() >> 63) != 0; }

/// Independent stream for trial `index` of a run seeded with `seed`.
inline std::mt19937_64 trial_stream(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

}  // namespace skewex

#endif  // SKEWEX_RANDOM_HPP
