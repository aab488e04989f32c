#pragma once

#include <random>
#include <string>
#include <vector>

#include "cantor/cantor.hpp"

namespace fixtures {

struct NamedSystem {
  std::string name;
  cantor::RadixSystem system;
};

/// The four radix systems the acceptance criteria sweep.
inline std::vector<NamedSystem> test_systems() {
  return {
      {"(2,2,...)", cantor::RadixSystem({}, {2})},
      {"(3,3,...)", cantor::RadixSystem({}, {3})},
      {"(2,3) periodic", cantor::RadixSystem({}, {2, 3})},
      {"(5,2,7;2)", cantor::RadixSystem({5, 2, 7}, {2})},
  };
}

inline cantor::LevelPoint random_point(const cantor::RadixSystem& sys, std::size_t level, std::mt19937_64& rng) {
  std::vector<cantor::Digit> digits(level);
  for (std::size_t i = 0; i < level; ++i) {
    digits[i] = std::uniform_int_distribution<cantor::Digit>(0, sys.radix_at(i + 1) - 1)(rng);
  }
  return cantor::LevelPoint(sys, digits);
}

/// A canonical clopen set built from up to `max_intervals` random intervals at
/// a random level in [min_level, max_level].
inline cantor::ClopenSet random_set(const cantor::RadixSystem& sys, std::mt19937_64& rng, std::size_t max_intervals,
                                    std::size_t min_level, std::size_t max_level) {
  const auto level = std::uniform_int_distribution<std::size_t>(min_level, max_level)(rng);
  const auto count = std::uniform_int_distribution<std::size_t>(0, max_intervals)(rng);
  std::vector<cantor::ClopenInterval> intervals;
  for (std::size_t k = 0; k < count; ++k) {
    auto a = random_point(sys, level, rng);
    auto b = random_point(sys, level, rng);
    if (cantor::compare(a, b) > 0) std::swap(a, b);
    intervals.emplace_back(a, b);
  }
  return cantor::ClopenSet::from_intervals(sys, level, intervals);
}

}  // namespace fixtures
