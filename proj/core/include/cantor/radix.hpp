#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "cantor/big_rational.hpp"
#include "cantor/error.hpp"

namespace cantor {

using Digit = std::uint32_t;

/// The sequence of cyclic orders n_1, n_2, ... of a Cantor group
/// C = ⊕ Z_{n_i}. The sequence is eventually periodic: a finite preperiod
/// followed by a nonempty period repeated forever. Every radix is at least 2.
///
/// RadixSystem is a cheap handle onto immutable shared data; copies alias the
/// same storage. Two systems compare equal when their radix sequences agree.
class RadixSystem {
 public:
  RadixSystem(std::vector<Digit> preperiod, std::vector<Digit> period);

  /// Radix n_i for 1-based position i.
  Digit radix_at(std::size_t i) const {
    if (i - 1 < data_->head.size()) return data_->head[i - 1];
    return radix_at_slow(i);
  }

  const std::vector<Digit>& preperiod() const noexcept { return data_->preperiod; }
  const std::vector<Digit>& period() const noexcept { return data_->period; }
  /// n_1, n_2, ... unrolled for the first positions; covers every level whose size fits in 63 bits.
  std::span<const Digit> leading_radices() const noexcept { return data_->head; }

  /// |C_n| = n_1 ⋯ n_n.
  BigInt level_size(std::size_t level) const;
  /// |C_n| when it fits in 63 bits.
  std::optional<std::uint64_t> level_size_u64(std::size_t level) const;

  /// Largest level whose quotient has at most `limit` points.
  std::size_t max_level_within(std::uint64_t limit) const;

  /// "preperiod=[2,4] period=[2]".
  std::string describe() const;

  friend bool operator==(const RadixSystem& a, const RadixSystem& b) noexcept {
    return a.data_ == b.data_ || a.same_radices(b);
  }

 private:
  Digit radix_at_slow(std::size_t i) const;
  bool same_radices(const RadixSystem& o) const noexcept;

  struct Data {
    std::vector<Digit> preperiod;
    std::vector<Digit> period;
    /// Radices at positions 1..kUnrolled.
    std::vector<Digit> head;
    /// |C_k| for every k whose size fits in 63 bits.
    std::vector<std::uint64_t> sizes;
  };
  static constexpr std::size_t kUnrolled = 128;
  std::shared_ptr<const Data> data_;
};

/// Radix n_i of `sys` at 1-based position i.
Digit radix_at(const RadixSystem& sys, std::size_t i);

using DigitVector = boost::container::small_vector<Digit, 14>;

/// A point of the finite quotient C_n (n = level), equivalently the compact
/// element of C whose digits after position n are all zero. Trailing zeros are
/// kept: the level records which quotient the point lives in.
class LevelPoint {
 public:
  LevelPoint(RadixSystem system, std::span<const Digit> digits);
  LevelPoint(RadixSystem system, std::initializer_list<Digit> digits)
      : LevelPoint(std::move(system), std::span<const Digit>(digits.begin(), digits.size())) {}

  /// The all-zero point of C_level.
  static LevelPoint zero(RadixSystem system, std::size_t level);
  /// The lexicographically largest point of C_level.
  static LevelPoint top(RadixSystem system, std::size_t level);

  const RadixSystem& system() const noexcept { return system_; }
  std::size_t level() const noexcept { return digits_.size(); }
  std::span<const Digit> digits() const noexcept { return {digits_.data(), digits_.size()}; }
  /// Digit at 1-based position i; zero past the level.
  Digit digit(std::size_t i) const noexcept { return i <= digits_.size() ? digits_[i - 1] : 0; }

  bool is_zero() const noexcept;
  bool is_top() const noexcept;

  std::string to_string() const;

  /// Same system, same level and same digits. Use lex_compare for the
  /// level-independent semantic order.
  friend bool operator==(const LevelPoint& a, const LevelPoint& b) noexcept {
    return a.digits_ == b.digits_ && a.system_ == b.system_;
  }

 private:
  struct Unchecked {};
  LevelPoint(Unchecked, RadixSystem system, DigitVector digits)
      : system_(std::move(system)), digits_(std::move(digits)) {}

  friend LevelPoint successor(const LevelPoint&);
  friend LevelPoint predecessor(const LevelPoint&);
  friend LevelPoint embed(const LevelPoint&, std::size_t);
  friend LevelPoint project(const LevelPoint&, std::size_t);
  friend LevelPoint unrank(const RadixSystem&, std::size_t, const BigInt&);

  RadixSystem system_;
  DigitVector digits_;
};

/// x' = sup(↓x ∖ {x}) for a compact x other than the bottom: the eventually
/// maximal sequence immediately below x. Stored symbolically by its base.
class CoCompactPoint {
 public:
  explicit CoCompactPoint(LevelPoint base);

  const LevelPoint& base() const noexcept { return base_; }
  const RadixSystem& system() const noexcept { return base_.system(); }
  /// Digit at 1-based position i of the eventually-max sequence.
  Digit digit(std::size_t i) const;
  /// Position of the last nonzero digit of the base; digits after it are maximal.
  std::size_t pivot() const noexcept { return pivot_; }

 private:
  LevelPoint base_;
  std::size_t pivot_;
};

/// An arbitrary point of C given by a deterministic digit rule. Queries are
/// range checked against the system.
class DigitProvider {
 public:
  using Rule = std::function<Digit(std::size_t)>;

  DigitProvider(RadixSystem system, Rule rule);

  /// Finite prefix followed by `cycle` repeated forever (cycle may be empty,
  /// meaning zeros).
  static DigitProvider eventually_periodic(RadixSystem system, std::vector<Digit> prefix,
                                           std::vector<Digit> cycle);
  /// The compact point p as an infinite sequence (zeros after its level).
  static DigitProvider from_point(const LevelPoint& p);
  /// Every digit maximal: the top element of C.
  static DigitProvider all_max(RadixSystem system);

  const RadixSystem& system() const noexcept { return system_; }
  /// Digit at 1-based position i.
  Digit digit(std::size_t i) const;
  /// The first k digits as a point of C_k.
  LevelPoint prefix(std::size_t k) const;

 private:
  RadixSystem system_;
  Rule rule_;
};

using AnyPoint = std::variant<LevelPoint, CoCompactPoint, DigitProvider>;

enum class Order { Less, Equal, Greater, Undecided };

struct Comparison {
  Order order;
  /// Number of digit positions inspected.
  std::size_t depth;

  friend bool operator==(const Comparison&, const Comparison&) = default;
};

/// Lexicographic comparison of two points of the same system. Finite
/// representations (LevelPoint, CoCompactPoint) always decide. When a
/// DigitProvider is involved and no difference appears within
/// `depth_budget` digits, the result is Undecided at that depth.
Comparison lex_compare(const AnyPoint& x, const AnyPoint& y, std::size_t depth_budget = 64);

/// Total order on compact points regardless of level.
std::strong_ordering compare(const LevelPoint& x, const LevelPoint& y);

LevelPoint successor(const LevelPoint& p);
LevelPoint predecessor(const LevelPoint& p);

/// Number of points of C_level strictly below p.
BigInt rank(const LevelPoint& p);
/// rank(p) when |C_level| fits in 63 bits.
std::optional<std::uint64_t> rank_u64(const LevelPoint& p) noexcept;
LevelPoint unrank(const RadixSystem& sys, std::size_t level, const BigInt& r);

/// ι: pad p with zeros up to level m.
LevelPoint embed(const LevelPoint& p, std::size_t m);
/// π: truncate p to its first n digits.
LevelPoint project(const LevelPoint& p, std::size_t n);

/// Componentwise addition in ⊕_{i≤n} Z_{n_i} (no carries).
LevelPoint group_add(const LevelPoint& x, const LevelPoint& g);

/// Σ d_i / (n_1 ⋯ n_i).
BigRational phi(const LevelPoint& p);
BigRational phi_cocompact(const CoCompactPoint& x);

struct Enclosure {
  BigRational lo;
  BigRational hi;
};

/// [φ of the k-digit truncation, that plus 1/(n_1 ⋯ n_k)].
Enclosure phi_enclosure(const DigitProvider& x, std::size_t k);

/// Midpoint of the depth-k enclosure in floating point, evaluated from the
/// innermost digit outward. Agrees with the exact midpoint to rounding.
double phi_midpoint(std::span<const Digit> digits, const RadixSystem& sys);

/// Σ 2 d_i / ∏_{j≤i} (2 n_j − 1): places C inside [0,1] as a generalized
/// middle-thirds set, so that (ψ, φ) traces a devil's staircase.
BigRational psi_gap_embed(const LevelPoint& p);

}  // namespace cantor
