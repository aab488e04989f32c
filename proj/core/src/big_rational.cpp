#include "cantor/big_rational.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <ostream>
#include <utility>

#include "cantor/error.hpp"

namespace cantor {

namespace {

using u64 = std::uint64_t;
using u128 = detail::uint128;
using i128 = detail::int128;

constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

u64 gcd64(u64 a, u64 b) {
  if (a == 0) return b;
  if (b == 0) return a;
  const int shift = __builtin_ctzll(a | b);
  a >>= __builtin_ctzll(a);
  do {
    b >>= __builtin_ctzll(b);
    const u64 lo = std::min(a, b);
    b = std::max(a, b) - lo;
    a = lo;
  } while (b != 0);
  return a << shift;
}

int ctz128(u128 x) {
  const auto lo = static_cast<u64>(x);
  return lo != 0 ? __builtin_ctzll(lo) : 64 + __builtin_ctzll(static_cast<u64>(x >> 64));
}

u128 gcd128(u128 a, u128 b) {
  if ((a >> 64) == 0 && (b >> 64) == 0) return gcd64(static_cast<u64>(a), static_cast<u64>(b));
  if (a == 0) return b;
  if (b == 0) return a;
  const int shift = ctz128(a | b);
  a >>= ctz128(a);
  do {
    b >>= ctz128(b);
    if (a > b) std::swap(a, b);
    b -= a;
  } while (b != 0);
  return a << shift;
}

BigInt to_bigint(i128 v) {
  const bool negative = v < 0;
  const u128 mag = negative ? -static_cast<u128>(v) : static_cast<u128>(v);
  BigInt out = static_cast<u64>(mag >> 64);
  out <<= 64;
  out |= static_cast<u64>(mag);
  return negative ? BigInt(-out) : out;
}

bool fits_small(const BigInt& v) { return v <= kMax && v >= -kMax; }

}  // namespace

BigRational::BigRational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator");
  *this = from_wide(num, den);
}

BigRational::BigRational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator");
  *this = from_big(Big(num, den));
}

BigRational::BigRational(const BigInt& value) { *this = from_big(Big(value)); }

BigRational BigRational::from_wide(i128 num, i128 den) {
  if (num <= kMax && num >= -kMax && den <= kMax && den > 0) {
    const auto n = static_cast<std::int64_t>(num);
    const auto d = static_cast<std::int64_t>(den);
    const u64 mag = static_cast<u64>(n < 0 ? -n : n);
    const u64 g = gcd64(mag, static_cast<u64>(d));
    BigRational r;
    r.num_ = n;
    r.den_ = d;
    if (g > 1) {
      if ((mag | static_cast<u64>(d)) <= 0xffffffffULL) {
        const auto g32 = static_cast<std::uint32_t>(g);
        const auto q = static_cast<std::int64_t>(static_cast<std::uint32_t>(mag) / g32);
        r.num_ = n < 0 ? -q : q;
        r.den_ = static_cast<std::uint32_t>(d) / g32;
      } else {
        r.num_ = n / static_cast<std::int64_t>(g);
        r.den_ = d / static_cast<std::int64_t>(g);
      }
    }
    return r;
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const u128 mag = num < 0 ? -static_cast<u128>(num) : static_cast<u128>(num);
  const u128 g = gcd128(mag, static_cast<u128>(den));
  if (g > 1) {
    num /= static_cast<i128>(g);
    den /= static_cast<i128>(g);
  }
  if (num <= kMax && num >= -kMax && den <= kMax) {
    BigRational r;
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
    return r;
  }
  return from_big(Big(to_bigint(num), to_bigint(den)));
}

BigRational BigRational::from_big(Big value) {
  BigRational r;
  const BigInt& n = boost::multiprecision::numerator(value);
  const BigInt& d = boost::multiprecision::denominator(value);
  if (fits_small(n) && fits_small(d)) {
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
  } else {
    r.big_ = std::make_shared<const Big>(std::move(value));
  }
  return r;
}

BigRational::Big BigRational::as_big() const {
  if (big_) return *big_;
  return Big(BigInt(num_), BigInt(den_));
}

BigRational BigRational::parse(std::string_view text) {
  const auto slash = text.find('/');
  const auto parse_int = [](std::string_view s, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) throw Error(ErrorKind::Parse, "malformed rational '" + std::string(s) + "'");
    for (std::size_t k = i; k < s.size(); ++k) {
      if (!std::isdigit(static_cast<unsigned char>(s[k]))) {
        throw Error(ErrorKind::Parse, "malformed rational '" + std::string(s) + "'");
      }
    }
    BigInt v(std::string(s.substr(i)));
    return (!s.empty() && s[0] == '-') ? BigInt(-v) : v;
  };
  if (slash == std::string_view::npos) return BigRational(parse_int(text, true));
  const BigInt den = parse_int(text.substr(slash + 1), false);
  if (den == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
  return BigRational(parse_int(text.substr(0, slash), true), den);
}

BigInt BigRational::numerator() const {
  return big_ ? BigInt(boost::multiprecision::numerator(*big_)) : BigInt(num_);
}

BigInt BigRational::denominator() const {
  return big_ ? BigInt(boost::multiprecision::denominator(*big_)) : BigInt(den_);
}

bool BigRational::is_integer() const { return big_ ? denominator() == 1 : den_ == 1; }

int BigRational::sign() const noexcept {
  if (big_) return big_->sign();
  return (num_ > 0) - (num_ < 0);
}

BigInt BigRational::floor() const {
  if (!big_) {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return BigInt(q);
  }
  const BigInt n = numerator();
  const BigInt d = denominator();
  BigInt q = n / d;
  if (q * d != n && n < 0) --q;
  return q;
}

double BigRational::to_double() const {
  if (!big_) return static_cast<double>(num_) / static_cast<double>(den_);
  return big_->convert_to<double>();
}

std::string BigRational::to_string() const {
  if (!big_) {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }
  const BigInt d = denominator();
  return d == 1 ? numerator().str() : numerator().str() + "/" + d.str();
}

std::string BigRational::to_decimal(int digits) const {
  const bool negative = sign() < 0;
  const BigRational mag = negative ? -*this : *this;
  const BigInt whole = mag.floor();
  std::string out = (negative ? "-" : "") + whole.str();
  if (digits <= 0) return out;
  BigInt scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  const BigInt frac = ((mag - BigRational(whole)) * BigRational(scale)).floor();
  std::string tail = frac.str();
  out += '.';
  out.append(static_cast<std::size_t>(digits) - tail.size(), '0');
  out += tail;
  return out;
}

BigRational BigRational::operator-() const {
  if (!big_) {
    BigRational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  return from_big(-*big_);
}

BigRational operator+(const BigRational& a, const BigRational& b) {
  if (!a.big_ && !b.big_) {
    if (a.den_ == b.den_) return BigRational::from_wide(static_cast<i128>(a.num_) + b.num_, a.den_);
    return BigRational::from_wide(static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_,
                                  static_cast<i128>(a.den_) * b.den_);
  }
  return BigRational::from_big(a.as_big() + b.as_big());
}

BigRational operator-(const BigRational& a, const BigRational& b) {
  if (!a.big_ && !b.big_) {
    if (a.den_ == b.den_) return BigRational::from_wide(static_cast<i128>(a.num_) - b.num_, a.den_);
    return BigRational::from_wide(static_cast<i128>(a.num_) * b.den_ - static_cast<i128>(b.num_) * a.den_,
                                  static_cast<i128>(a.den_) * b.den_);
  }
  return BigRational::from_big(a.as_big() - b.as_big());
}

BigRational operator*(const BigRational& a, const BigRational& b) {
  if (!a.big_ && !b.big_) {
    return BigRational::from_wide(static_cast<i128>(a.num_) * b.num_, static_cast<i128>(a.den_) * b.den_);
  }
  return BigRational::from_big(a.as_big() * b.as_big());
}

BigRational operator/(const BigRational& a, const BigRational& b) {
  if (b.is_zero()) throw Error(ErrorKind::InvalidArgument, "division by zero");
  if (!a.big_ && !b.big_) {
    return BigRational::from_wide(static_cast<i128>(a.num_) * b.den_, static_cast<i128>(a.den_) * b.num_);
  }
  return BigRational::from_big(a.as_big() / b.as_big());
}

bool operator==(const BigRational& a, const BigRational& b) noexcept {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;
}

std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
  if (!a.big_ && !b.big_) {
    const i128 lhs = static_cast<i128>(a.num_) * b.den_;
    const i128 rhs = static_cast<i128>(b.num_) * a.den_;
    return lhs <=> rhs;
  }
  const auto big_a = a.as_big();
  const auto big_b = b.as_big();
  if (big_a < big_b) return std::strong_ordering::less;
  if (big_b < big_a) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const BigRational& r) { return os << r.to_string(); }

}  // namespace cantor
