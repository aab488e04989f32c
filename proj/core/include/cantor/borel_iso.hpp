#pragma once

#include <cstddef>
#include <optional>

#include "cantor/radix.hpp"

namespace cantor {

enum class ConversionStatus { Terminated, Truncated };

struct ConversionResult {
  /// Digits in the target system. When Terminated this is the eventually-zero
  /// representative; when Truncated only these leading digits are known.
  LevelPoint digits;
  ConversionStatus status;
  /// Digits produced before stopping.
  std::size_t consumed;
  /// φ(digits), present only when Terminated.
  std::optional<BigRational> value;
};

/// Greedy expansion of r ∈ [0,1] in `sys`: d_i = ⌊r_i n_i⌋, r_{i+1} = r_i n_i − d_i.
/// r = 1 has no eventually-zero representative and yields max_k maximal digits,
/// Truncated.
ConversionResult digits_of_rational(const BigRational& r, const RadixSystem& sys, std::size_t max_k);

/// φ₂⁻¹ ∘ φ₁ on a compact point of `from`.
ConversionResult iso_point(const LevelPoint& x, const RadixSystem& from, const RadixSystem& to, std::size_t max_k);

struct StreamResult {
  /// Certified leading digits in the target system; never retracted.
  LevelPoint digits;
  /// True when the final source enclosure straddles the boundary of a target
  /// cell wider than the enclosure, so the next digit could not be certified.
  bool undecided;
  /// Source digits consumed.
  std::size_t precision;
};

/// Streams target digits from an arbitrary source point by refining φ
/// enclosures up to `budget` source digits. A digit is emitted only once the
/// enclosure sits inside one target cell, excluding that cell's upper end
/// unless the upper end is 1.
StreamResult iso_stream(const DigitProvider& x, const RadixSystem& to, std::size_t budget);

}  // namespace cantor
