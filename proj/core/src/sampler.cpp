#include "cantor/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "cantor/haar.hpp"

namespace cantor {

namespace {

constexpr std::uint64_t mix(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

void validate(const SamplerConfig& cfg) {
  if (cfg.depth < 1) throw Error(ErrorKind::InvalidArgument, "sampling depth must be at least 1");
  if (cfg.count < 1) throw Error(ErrorKind::InvalidArgument, "sample count must be at least 1");
  if (cfg.first_digit_zero_mass && (*cfg.first_digit_zero_mass < 0 || *cfg.first_digit_zero_mass > 1)) {
    throw Error(ErrorKind::InvalidArgument, "first-digit mass must lie in [0, 1]");
  }
}

Digit draw(const SamplerConfig& cfg, std::size_t index, std::size_t position) {
  const Digit n = cfg.system.radix_at(position);
  const std::uint64_t word = counter_random(cfg.seed, index, position);
  if (position == 1 && cfg.first_digit_zero_mass) {
    const double u = static_cast<double>(word >> 11) * 0x1.0p-53;
    if (u < *cfg.first_digit_zero_mass) return 0;
    return 1 + static_cast<Digit>(mix(word) % (n - 1));
  }
  return static_cast<Digit>(word % n);
}

}  // namespace

std::uint64_t counter_random(std::uint64_t seed, std::uint64_t index, std::uint64_t position) noexcept {
  return mix(mix(mix(seed) ^ index) ^ (position * 0xd1b54a32d192ed03ULL));
}

LevelPoint sample_digits(const SamplerConfig& cfg, std::size_t index) {
  validate(cfg);
  if (index >= cfg.count) throw Error(ErrorKind::OutOfRange, "sample index beyond count");
  std::vector<Digit> digits(cfg.depth);
  for (std::size_t i = 1; i <= cfg.depth; ++i) digits[i - 1] = draw(cfg, index, i);
  return LevelPoint(cfg.system, digits);
}

double ks_statistic(std::span<const double> sorted_values) {
  if (sorted_values.empty()) throw Error(ErrorKind::EmptyInput, "no values");
  const auto n = static_cast<double>(sorted_values.size());
  double d = 0;
  double prev = -1;
  for (std::size_t i = 0; i < sorted_values.size(); ++i) {
    const double v = sorted_values[i];
    if (v < 0 || v > 1) throw Error(ErrorKind::OutOfRange, "value outside [0, 1]");
    if (v < prev) throw Error(ErrorKind::InvalidArgument, "values must be sorted ascending");
    prev = v;
    const auto rank = static_cast<double>(i + 1);
    d = std::max({d, rank / n - v, v - (rank - 1) / n});
  }
  return d;
}

KsReport run_uniformity_test(const SamplerConfig& cfg) {
  validate(cfg);
  std::vector<double> values(cfg.count);
  std::vector<Digit> digits(cfg.depth);
  for (std::size_t k = 0; k < cfg.count; ++k) {
    for (std::size_t i = 1; i <= cfg.depth; ++i) digits[i - 1] = draw(cfg, k, i);
    values[k] = phi_midpoint(digits, cfg.system);
  }
  std::ranges::sort(values);
  KsReport report;
  report.n = cfg.count;
  report.statistic = ks_statistic(values);
  report.critical_value = kKsCoefficient01 / std::sqrt(static_cast<double>(cfg.count));
  report.pass = report.statistic < report.critical_value;
  return report;
}

FrequencyReport empirical_vs_exact(const ClopenSet& s, const SamplerConfig& cfg) {
  validate(cfg);
  if (cfg.depth < s.level()) {
    throw Error(ErrorKind::DepthTooSmall,
                "depth " + std::to_string(cfg.depth) + " is below set level " + std::to_string(s.level()));
  }
  std::size_t hits = 0;
  std::vector<Digit> digits(s.level());
  for (std::size_t k = 0; k < cfg.count; ++k) {
    for (std::size_t i = 1; i <= s.level(); ++i) digits[i - 1] = draw(cfg, k, i);
    hits += s.contains(LevelPoint(cfg.system, digits));
  }
  FrequencyReport report;
  report.n = cfg.count;
  report.exact = haar_measure(s);
  report.frequency = static_cast<double>(hits) / static_cast<double>(cfg.count);
  const double p = report.exact.to_double();
  report.deviation = std::abs(report.frequency - p);
  report.bound = 3 * std::sqrt(p * (1 - p) / static_cast<double>(cfg.count));
  report.pass = report.deviation <= report.bound;
  return report;
}

}  // namespace cantor
