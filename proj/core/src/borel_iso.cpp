#include "cantor/borel_iso.hpp"

#include <vector>

namespace cantor {

ConversionResult digits_of_rational(const BigRational& r, const RadixSystem& sys, std::size_t max_k) {
  if (r.sign() < 0 || r > BigRational(1)) {
    throw Error(ErrorKind::OutOfRange, r.to_string() + " is outside [0, 1]");
  }
  if (r == BigRational(1)) {
    return {LevelPoint::top(sys, max_k), ConversionStatus::Truncated, max_k, std::nullopt};
  }
  std::vector<Digit> digits;
  BigRational rest = r;
  while (!rest.is_zero() && digits.size() < max_k) {
    const Digit n = sys.radix_at(digits.size() + 1);
    const BigRational scaled = rest * BigRational(static_cast<std::int64_t>(n));
    auto d = static_cast<Digit>(static_cast<std::uint64_t>(scaled.floor()));
    if (d >= n) d = n - 1;
    digits.push_back(d);
    rest = scaled - BigRational(static_cast<std::int64_t>(d));
  }
  LevelPoint point(sys, digits);
  if (rest.is_zero()) {
    BigRational value = phi(point);
    return {std::move(point), ConversionStatus::Terminated, digits.size(), std::move(value)};
  }
  return {std::move(point), ConversionStatus::Truncated, digits.size(), std::nullopt};
}

ConversionResult iso_point(const LevelPoint& x, const RadixSystem& from, const RadixSystem& to, std::size_t max_k) {
  if (!(x.system() == from)) throw Error(ErrorKind::MixedSystems, "point is not over the source system");
  return digits_of_rational(phi(x), to, max_k);
}

StreamResult iso_stream(const DigitProvider& x, const RadixSystem& to, std::size_t budget) {
  const BigRational one(1);
  BigRational lo;                 // φ of the consumed source prefix
  BigRational width = one;        // source enclosure width
  BigRational base;               // left end of the certified target cell
  BigRational cell = one;         // width of the certified target cell
  std::vector<Digit> out;

  const auto try_emit = [&]() {
    const Digit m = to.radix_at(out.size() + 1);
    const BigRational child = cell / BigRational(static_cast<std::int64_t>(m));
    auto d = static_cast<Digit>(static_cast<std::uint64_t>(((lo - base) / child).floor()));
    if (d >= m) d = m - 1;
    const BigRational cell_lo = base + BigRational(static_cast<std::int64_t>(d)) * child;
    const BigRational cell_hi = cell_lo + child;
    const BigRational hi = lo + width;
    const bool inside = lo >= cell_lo && (hi < cell_hi || (cell_hi == one && hi <= one));
    if (!inside) return false;
    out.push_back(d);
    base = cell_lo;
    cell = child;
    return true;
  };

  std::size_t k = 0;
  while (true) {
    while (try_emit()) {
    }
    if (k == budget) break;
    ++k;
    const Digit n = x.system().radix_at(k);
    width = width / BigRational(static_cast<std::int64_t>(n));
    lo += BigRational(static_cast<std::int64_t>(x.digit(k))) * width;
  }

  const BigRational next_cell = cell / BigRational(static_cast<std::int64_t>(to.radix_at(out.size() + 1)));
  return {LevelPoint(to, out), next_cell > width, budget};
}

}  // namespace cantor
