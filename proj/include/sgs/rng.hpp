#pragma once

#include <cstdint>
#include <random>

namespace sgs {

// All randomized audits take an explicit seed; results are reproducible per seed.
using Rng = std::mt19937_64;

inline std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline bool coin(Rng& rng) { return uniform_int(rng, 0, 1) == 1; }

}  // namespace sgs
