#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mcgsig/surface.hpp"

namespace mcgsig {

/// splitmix64: tiny, seedable, identical on every platform, so randomized
/// campaigns replay from their RunConfig.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [lo, hi], inclusive.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(next() % span);
  }

 private:
  std::uint64_t state_;
};

/// Uniform generator names, exponents in [-3,3]\{0}, length in [1, max_len].
Word random_word(Rng& rng, const std::vector<std::string>& names, std::size_t max_len);

}  // namespace mcgsig
