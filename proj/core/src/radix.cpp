#include "cantor/radix.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace cantor {

namespace {

std::string join(std::span<const Digit> xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(xs[i]);
  }
  return out;
}

void require_same_system(const RadixSystem& a, const RadixSystem& b) {
  if (!(a == b)) throw Error(ErrorKind::MixedSystems, a.describe() + " vs " + b.describe());
}

}  // namespace

// ---------------------------------------------------------------------------
// RadixSystem

RadixSystem::RadixSystem(std::vector<Digit> preperiod, std::vector<Digit> period) {
  if (period.empty()) throw Error(ErrorKind::InvalidArgument, "radix period must be nonempty");
  const auto bad = [](Digit n) { return n < 2; };
  if (std::ranges::any_of(preperiod, bad) || std::ranges::any_of(period, bad)) {
    throw Error(ErrorKind::InvalidArgument, "every radix must be at least 2");
  }
  Data data{std::move(preperiod), std::move(period), {}, {1}};
  const auto at = [&](std::size_t i) {
    return i <= data.preperiod.size() ? data.preperiod[i - 1]
                                      : data.period[(i - data.preperiod.size() - 1) % data.period.size()];
  };
  constexpr std::uint64_t kLimit = (std::uint64_t{1} << 63) - 1;
  for (std::size_t i = 1; i <= kUnrolled; ++i) {
    const Digit n = at(i);
    data.head.push_back(n);
    if (data.sizes.size() == i && data.sizes.back() <= kLimit / n) data.sizes.push_back(data.sizes.back() * n);
  }
  data_ = std::make_shared<const Data>(std::move(data));
}

Digit RadixSystem::radix_at_slow(std::size_t i) const {
  if (i == 0) throw Error(ErrorKind::InvalidArgument, "radix positions are 1-based");
  const auto& pre = data_->preperiod;
  if (i <= pre.size()) return pre[i - 1];
  const auto& per = data_->period;
  return per[(i - pre.size() - 1) % per.size()];
}

BigInt RadixSystem::level_size(std::size_t level) const {
  if (auto small = level_size_u64(level)) return BigInt(*small);
  BigInt size = 1;
  for (std::size_t i = 1; i <= level; ++i) size *= radix_at(i);
  return size;
}

std::optional<std::uint64_t> RadixSystem::level_size_u64(std::size_t level) const {
  const auto& sizes = data_->sizes;
  if (level < sizes.size()) return sizes[level];
  return std::nullopt;
}

std::size_t RadixSystem::max_level_within(std::uint64_t limit) const {
  std::size_t level = 0;
  std::uint64_t size = 1;
  while (true) {
    const Digit n = radix_at(level + 1);
    if (size > limit / n) return level;
    size *= n;
    ++level;
  }
}

std::string RadixSystem::describe() const {
  return "preperiod=[" + join(data_->preperiod) + "] period=[" + join(data_->period) + "]";
}

bool RadixSystem::same_radices(const RadixSystem& o) const noexcept {
  const RadixSystem& a = *this;
  const RadixSystem& b = o;
  const std::size_t pre = std::max(a.preperiod().size(), b.preperiod().size());
  const std::size_t cycle = std::lcm(a.period().size(), b.period().size());
  for (std::size_t i = 1; i <= pre + cycle; ++i) {
    if (a.radix_at(i) != b.radix_at(i)) return false;
  }
  return true;
}

Digit radix_at(const RadixSystem& sys, std::size_t i) { return sys.radix_at(i); }

// ---------------------------------------------------------------------------
// Points

LevelPoint::LevelPoint(RadixSystem system, std::span<const Digit> digits)
    : system_(std::move(system)), digits_(digits.begin(), digits.end()) {
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    const Digit n = system_.radix_at(i + 1);
    if (digits_[i] >= n) {
      throw Error(ErrorKind::OutOfRange, "digit " + std::to_string(digits_[i]) + " at position " +
                                             std::to_string(i + 1) + " is not below radix " + std::to_string(n));
    }
  }
}

LevelPoint LevelPoint::zero(RadixSystem system, std::size_t level) {
  return LevelPoint(Unchecked{}, std::move(system), DigitVector(level, 0));
}

LevelPoint LevelPoint::top(RadixSystem system, std::size_t level) {
  DigitVector digits(level);
  for (std::size_t i = 0; i < level; ++i) digits[i] = system.radix_at(i + 1) - 1;
  return LevelPoint(Unchecked{}, std::move(system), std::move(digits));
}

bool LevelPoint::is_zero() const noexcept {
  return std::ranges::all_of(digits_, [](Digit d) { return d == 0; });
}

bool LevelPoint::is_top() const noexcept {
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    if (digits_[i] + 1 != system_.radix_at(i + 1)) return false;
  }
  return true;
}

std::string LevelPoint::to_string() const { return "(" + join(digits()) + ")"; }

CoCompactPoint::CoCompactPoint(LevelPoint base) : base_(std::move(base)), pivot_(0) {
  for (std::size_t i = base_.level(); i >= 1; --i) {
    if (base_.digit(i) != 0) {
      pivot_ = i;
      break;
    }
  }
  if (pivot_ == 0) throw Error(ErrorKind::InvalidArgument, "the bottom element has no co-compact predecessor");
}

Digit CoCompactPoint::digit(std::size_t i) const {
  if (i < pivot_) return base_.digit(i);
  if (i == pivot_) return base_.digit(i) - 1;
  return system().radix_at(i) - 1;
}

DigitProvider::DigitProvider(RadixSystem system, Rule rule) : system_(std::move(system)), rule_(std::move(rule)) {
  if (!rule_) throw Error(ErrorKind::InvalidArgument, "digit rule is empty");
}

DigitProvider DigitProvider::eventually_periodic(RadixSystem system, std::vector<Digit> prefix,
                                                 std::vector<Digit> cycle) {
  return DigitProvider(std::move(system), [prefix = std::move(prefix), cycle = std::move(cycle)](std::size_t i) {
    if (i <= prefix.size()) return prefix[i - 1];
    if (cycle.empty()) return Digit{0};
    return cycle[(i - prefix.size() - 1) % cycle.size()];
  });
}

DigitProvider DigitProvider::from_point(const LevelPoint& p) {
  return DigitProvider(p.system(), [p](std::size_t i) { return p.digit(i); });
}

DigitProvider DigitProvider::all_max(RadixSystem system) {
  return DigitProvider(system, [system](std::size_t i) { return system.radix_at(i) - 1; });
}

Digit DigitProvider::digit(std::size_t i) const {
  if (i == 0) throw Error(ErrorKind::InvalidArgument, "digit positions are 1-based");
  const Digit d = rule_(i);
  if (d >= system_.radix_at(i)) {
    throw Error(ErrorKind::OutOfRange, "provider produced digit " + std::to_string(d) + " at position " +
                                           std::to_string(i));
  }
  return d;
}

LevelPoint DigitProvider::prefix(std::size_t k) const {
  DigitVector digits(k);
  for (std::size_t i = 1; i <= k; ++i) digits[i - 1] = digit(i);
  return LevelPoint(system_, std::span<const Digit>(digits.data(), digits.size()));
}

// ---------------------------------------------------------------------------
// Order

namespace {

const RadixSystem& system_of(const AnyPoint& p) {
  return std::visit([](const auto& v) -> const RadixSystem& { return v.system(); }, p);
}

Digit digit_of(const AnyPoint& p, std::size_t i) {
  return std::visit([i](const auto& v) { return v.digit(i); }, p);
}

// Position after which a finite representation has a constant tail.
std::optional<std::size_t> horizon(const AnyPoint& p) {
  if (const auto* lp = std::get_if<LevelPoint>(&p)) return lp->level();
  if (const auto* cc = std::get_if<CoCompactPoint>(&p)) return cc->pivot();
  return std::nullopt;
}

}  // namespace

Comparison lex_compare(const AnyPoint& x, const AnyPoint& y, std::size_t depth_budget) {
  require_same_system(system_of(x), system_of(y));
  const auto hx = horizon(x);
  const auto hy = horizon(y);
  const bool finite = hx && hy;
  // Two finite representations must differ by position max(h)+1 if they differ at all.
  const std::size_t limit = finite ? std::max(*hx, *hy) + 1 : depth_budget;
  for (std::size_t i = 1; i <= limit; ++i) {
    const Digit a = digit_of(x, i);
    const Digit b = digit_of(y, i);
    if (a != b) return {a < b ? Order::Less : Order::Greater, i};
  }
  if (finite) return {Order::Equal, limit};
  return {Order::Undecided, depth_budget};
}

std::strong_ordering compare(const LevelPoint& x, const LevelPoint& y) {
  require_same_system(x.system(), y.system());
  const std::size_t n = std::max(x.level(), y.level());
  for (std::size_t i = 1; i <= n; ++i) {
    const Digit a = x.digit(i);
    const Digit b = y.digit(i);
    if (a != b) return a <=> b;
  }
  return std::strong_ordering::equal;
}

LevelPoint successor(const LevelPoint& p) {
  DigitVector digits = p.digits_;
  for (std::size_t i = digits.size(); i >= 1; --i) {
    if (digits[i - 1] + 1 < p.system_.radix_at(i)) {
      ++digits[i - 1];
      return LevelPoint(LevelPoint::Unchecked{}, p.system_, std::move(digits));
    }
    digits[i - 1] = 0;
  }
  throw Error(ErrorKind::Overflow, p.to_string() + " is the maximum of level " + std::to_string(p.level()));
}

LevelPoint predecessor(const LevelPoint& p) {
  DigitVector digits = p.digits_;
  for (std::size_t i = digits.size(); i >= 1; --i) {
    if (digits[i - 1] > 0) {
      --digits[i - 1];
      return LevelPoint(LevelPoint::Unchecked{}, p.system_, std::move(digits));
    }
    digits[i - 1] = p.system_.radix_at(i) - 1;
  }
  throw Error(ErrorKind::Underflow, p.to_string() + " is the minimum of level " + std::to_string(p.level()));
}

std::optional<std::uint64_t> rank_u64(const LevelPoint& p) noexcept {
  if (!p.system().level_size_u64(p.level())) return std::nullopt;
  const auto digits = p.digits();
  const Digit* radices = p.system().leading_radices().data();
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < digits.size(); ++i) r = r * radices[i] + digits[i];
  return r;
}

BigInt rank(const LevelPoint& p) {
  if (const auto r = rank_u64(p)) return BigInt(*r);
  const auto digits = p.digits();
  BigInt r = 0;
  for (std::size_t i = 0; i < digits.size(); ++i) r = r * p.system().radix_at(i + 1) + digits[i];
  return r;
}

LevelPoint unrank(const RadixSystem& sys, std::size_t level, const BigInt& r) {
  if (r < 0 || r >= sys.level_size(level)) {
    throw Error(ErrorKind::RankOutOfRange, "rank " + r.str() + " outside level " + std::to_string(level));
  }
  DigitVector digits(level);
  if (r <= std::numeric_limits<std::uint64_t>::max()) {
    auto rest = static_cast<std::uint64_t>(r);
    for (std::size_t i = level; i >= 1; --i) {
      const Digit n = sys.radix_at(i);
      digits[i - 1] = static_cast<Digit>(rest % n);
      rest /= n;
    }
  } else {
    BigInt rest = r;
    for (std::size_t i = level; i >= 1; --i) {
      const Digit n = sys.radix_at(i);
      digits[i - 1] = static_cast<Digit>(static_cast<std::uint32_t>(rest % n));
      rest /= n;
    }
  }
  return LevelPoint(LevelPoint::Unchecked{}, sys, std::move(digits));
}

LevelPoint embed(const LevelPoint& p, std::size_t m) {
  if (m < p.level()) {
    throw Error(ErrorKind::LevelTooSmall,
                "cannot embed level " + std::to_string(p.level()) + " into level " + std::to_string(m));
  }
  DigitVector digits = p.digits_;
  digits.resize(m, 0);
  return LevelPoint(LevelPoint::Unchecked{}, p.system_, std::move(digits));
}

LevelPoint project(const LevelPoint& p, std::size_t n) {
  if (n > p.level()) {
    throw Error(ErrorKind::LevelTooLarge,
                "cannot project level " + std::to_string(p.level()) + " onto level " + std::to_string(n));
  }
  DigitVector digits(p.digits_.begin(), p.digits_.begin() + static_cast<std::ptrdiff_t>(n));
  return LevelPoint(LevelPoint::Unchecked{}, p.system_, std::move(digits));
}

LevelPoint group_add(const LevelPoint& x, const LevelPoint& g) {
  require_same_system(x.system(), g.system());
  if (x.level() != g.level()) throw Error(ErrorKind::InvalidArgument, "group_add needs points of one level");
  std::vector<Digit> digits(x.level());
  for (std::size_t i = 1; i <= x.level(); ++i) digits[i - 1] = (x.digit(i) + g.digit(i)) % x.system().radix_at(i);
  return LevelPoint(x.system(), digits);
}

// ---------------------------------------------------------------------------
// The map to [0,1]

BigRational phi(const LevelPoint& p) {
  BigRational sum;
  BigRational weight = 1;
  for (std::size_t i = 1; i <= p.level(); ++i) {
    weight = weight / BigRational(static_cast<std::int64_t>(p.system().radix_at(i)));
    if (const Digit d = p.digit(i); d != 0) sum += BigRational(static_cast<std::int64_t>(d)) * weight;
  }
  return sum;
}

BigRational phi_cocompact(const CoCompactPoint& x) { return phi(x.base()); }

Enclosure phi_enclosure(const DigitProvider& x, std::size_t k) {
  const LevelPoint truncated = x.prefix(k);
  BigRational lo = phi(truncated);
  BigRational width(BigInt(1), x.system().level_size(k));
  BigRational hi = lo + width;
  return {std::move(lo), std::move(hi)};
}

double phi_midpoint(std::span<const Digit> digits, const RadixSystem& sys) {
  double v = 0.5;
  for (std::size_t i = digits.size(); i >= 1; --i) {
    v = (static_cast<double>(digits[i - 1]) + v) / static_cast<double>(sys.radix_at(i));
  }
  return v;
}

BigRational psi_gap_embed(const LevelPoint& p) {
  BigRational sum;
  BigRational weight = 1;
  for (std::size_t i = 1; i <= p.level(); ++i) {
    weight = weight / BigRational(2 * static_cast<std::int64_t>(p.system().radix_at(i)) - 1);
    if (const Digit d = p.digit(i); d != 0) sum += BigRational(2 * static_cast<std::int64_t>(d)) * weight;
  }
  return sum;
}

}  // namespace cantor
