#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace cantor {

using BigInt = boost::multiprecision::cpp_int;

namespace detail {
__extension__ typedef __int128 int128;
__extension__ typedef unsigned __int128 uint128;
}  // namespace detail

/// Exact rational number in canonical form (gcd(num, den) = 1, den > 0).
///
/// Values whose numerator and denominator fit in int64 are held inline; larger
/// values spill to a shared, immutable cpp_rational. The two representations
/// are never mixed for the same value, so equality is a field comparison.
class BigRational {
 public:
  BigRational() noexcept = default;
  BigRational(std::int64_t value) noexcept : num_(value) {}  // NOLINT: implicit by design of a number type
  BigRational(std::int64_t num, std::int64_t den);
  BigRational(const BigInt& num, const BigInt& den);
  explicit BigRational(const BigInt& value);

  /// Parses "p", "-p" or "p/q".
  static BigRational parse(std::string_view text);

  BigInt numerator() const;
  BigInt denominator() const;
  bool is_integer() const;
  bool is_zero() const noexcept { return !big_ && num_ == 0; }
  int sign() const noexcept;

  /// Largest integer not greater than the value.
  BigInt floor() const;
  double to_double() const;
  /// "p/q", or "p" when the denominator is 1.
  std::string to_string() const;
  /// Fixed-point decimal rendering with the given number of fractional digits (truncated).
  std::string to_decimal(int digits) const;

  BigRational operator-() const;
  friend BigRational operator+(const BigRational& a, const BigRational& b);
  friend BigRational operator-(const BigRational& a, const BigRational& b);
  friend BigRational operator*(const BigRational& a, const BigRational& b);
  friend BigRational operator/(const BigRational& a, const BigRational& b);

  BigRational& operator+=(const BigRational& o) { return *this = *this + o; }
  BigRational& operator-=(const BigRational& o) { return *this = *this - o; }
  BigRational& operator*=(const BigRational& o) { return *this = *this * o; }
  BigRational& operator/=(const BigRational& o) { return *this = *this / o; }

  friend bool operator==(const BigRational& a, const BigRational& b) noexcept;
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b);

 private:
  using Big = boost::multiprecision::cpp_rational;

  static BigRational from_big(Big value);
  static BigRational from_wide(detail::int128 num, detail::int128 den);
  Big as_big() const;

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const Big> big_;
};

std::ostream& operator<<(std::ostream& os, const BigRational& r);

}  // namespace cantor
