#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>

#include "cantor/clopen.hpp"

namespace cantor {

struct SamplerConfig {
  RadixSystem system;
  std::size_t depth = 40;
  std::size_t count = 100000;
  std::uint64_t seed = 0;
  /// Control sampler for power checks: when set, the first digit is 0 with
  /// this probability and otherwise uniform over the remaining values.
  std::optional<double> first_digit_zero_mass;
};

/// Counter-based generator: the value depends only on (seed, index, position),
/// so any partition of the index range reproduces the same stream.
std::uint64_t counter_random(std::uint64_t seed, std::uint64_t index, std::uint64_t position) noexcept;

/// Haar-uniform point of C_depth: digit i is uniform on [0, n_i), independent
/// across positions and indices.
LevelPoint sample_digits(const SamplerConfig& cfg, std::size_t index);

struct KsReport {
  double statistic = 0;
  double critical_value = 0;
  std::size_t n = 0;
  bool pass = false;
};

/// c(0.01) of the asymptotic Kolmogorov distribution.
inline constexpr double kKsCoefficient01 = 1.628;

/// One-sample Kolmogorov–Smirnov distance to Uniform[0,1] of sorted values.
double ks_statistic(std::span<const double> sorted_values);

/// Samples cfg.count points, maps each to the midpoint of its depth
/// enclosure, and tests the result against Uniform[0,1] at α = 0.01.
KsReport run_uniformity_test(const SamplerConfig& cfg);

struct FrequencyReport {
  double frequency = 0;
  BigRational exact;
  double deviation = 0;
  /// 3σ binomial bound 3 √(p(1 − p)/N).
  double bound = 0;
  std::size_t n = 0;
  bool pass = false;
};

/// Empirical membership frequency of sampled points in s against μ_C(s).
FrequencyReport empirical_vs_exact(const ClopenSet& s, const SamplerConfig& cfg);

}  // namespace cantor
