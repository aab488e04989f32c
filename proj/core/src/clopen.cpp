#include "cantor/clopen.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace cantor {

namespace {

void require_same_system(const RadixSystem& a, const RadixSystem& b) {
  if (!(a == b)) throw Error(ErrorKind::MixedSystems, a.describe() + " vs " + b.describe());
}

// ∏_{from < i ≤ to} n_i: the number of level-`to` points above each level-`from` point.
BigInt extension_factor(const RadixSystem& sys, std::size_t from, std::size_t to) {
  BigInt f = 1;
  for (std::size_t i = from + 1; i <= to; ++i) f *= sys.radix_at(i);
  return f;
}

}  // namespace

/// Inclusive rank ranges at a fixed level; the working representation for the
/// Boolean operations.
class RangeList {
 public:
  using Range = std::pair<BigInt, BigInt>;

  static std::vector<Range> of(const ClopenSet& s, std::size_t level) {
    const BigInt factor = extension_factor(s.system(), s.level(), level);
    std::vector<Range> out;
    out.reserve(s.intervals().size());
    for (const auto& iv : s.intervals()) {
      out.emplace_back(rank(iv.lo()) * factor, (rank(iv.hi()) + 1) * factor - 1);
    }
    return out;
  }

  static std::vector<Range> normalize(std::vector<Range> ranges) {
    std::ranges::sort(ranges, [](const Range& a, const Range& b) { return a.first < b.first; });
    std::vector<Range> out;
    for (auto& r : ranges) {
      if (!out.empty() && r.first <= out.back().second + 1) {
        if (r.second > out.back().second) out.back().second = r.second;
      } else {
        out.push_back(std::move(r));
      }
    }
    return out;
  }

  static ClopenSet build(const RadixSystem& sys, std::size_t level, std::vector<Range> ranges) {
    std::vector<ClopenInterval> intervals;
    intervals.reserve(ranges.size());
    for (const auto& [lo, hi] : normalize(std::move(ranges))) {
      intervals.emplace_back(unrank(sys, level, lo), unrank(sys, level, hi));
    }
    return ClopenSet(sys, level, std::move(intervals));
  }

  static bool covers(const std::vector<Range>& ranges, const BigInt& r) {
    auto it = std::ranges::upper_bound(ranges, r, {}, &Range::first);
    if (it == ranges.begin()) return false;
    return r <= std::prev(it)->second;
  }
};

// ---------------------------------------------------------------------------

ClopenInterval::ClopenInterval(LevelPoint&& lo, LevelPoint&& hi) : lo_(std::move(lo)), hi_(std::move(hi)) { check(); }

ClopenInterval::ClopenInterval(const LevelPoint& lo, const LevelPoint& hi, Copy) : lo_(lo), hi_(hi) { check(); }

void ClopenInterval::check() const {
  if (lo_.level() != hi_.level()) throw Error(ErrorKind::InvalidArgument, "interval endpoints must share a level");
  if (compare(lo_, hi_) > 0) {
    throw Error(ErrorKind::InvalidArgument, "interval " + lo_.to_string() + ".." + hi_.to_string() + " is reversed");
  }
}

ClopenSet ClopenSet::empty(RadixSystem system, std::size_t level) { return ClopenSet(std::move(system), level, {}); }

ClopenSet ClopenSet::full(RadixSystem system, std::size_t level) {
  std::vector<ClopenInterval> whole;
  whole.emplace_back(LevelPoint::zero(system, level), LevelPoint::top(system, level));
  return ClopenSet(std::move(system), level, std::move(whole));
}

ClopenSet ClopenSet::interval(LevelPoint lo, LevelPoint hi) {
  RadixSystem sys = lo.system();
  const std::size_t level = lo.level();
  std::vector<ClopenInterval> one;
  one.emplace_back(std::move(lo), std::move(hi));
  return ClopenSet(std::move(sys), level, std::move(one));
}

ClopenSet ClopenSet::from_intervals(RadixSystem system, std::size_t level, std::span<const ClopenInterval> intervals) {
  std::vector<RangeList::Range> ranges;
  ranges.reserve(intervals.size());
  for (const auto& iv : intervals) {
    require_same_system(system, iv.lo().system());
    if (iv.level() != level) throw Error(ErrorKind::InvalidArgument, "interval level differs from set level");
    ranges.emplace_back(rank(iv.lo()), rank(iv.hi()));
  }
  return RangeList::build(system, level, std::move(ranges));
}

ClopenSet ClopenSet::from_prefixes(RadixSystem system, std::size_t level, std::span<const LevelPoint> prefixes) {
  std::vector<RangeList::Range> ranges;
  ranges.reserve(prefixes.size());
  for (const auto& p : prefixes) {
    require_same_system(system, p.system());
    if (p.level() != level) throw Error(ErrorKind::InvalidArgument, "prefix level differs from set level");
    BigInt r = rank(p);
    ranges.emplace_back(r, r);
  }
  return RangeList::build(system, level, std::move(ranges));
}

bool ClopenSet::is_full() const {
  return intervals_.size() == 1 && intervals_.front().lo().is_zero() && intervals_.front().hi().is_top();
}

bool ClopenSet::contains(const LevelPoint& p) const {
  require_same_system(system_, p.system());
  if (p.level() < level_) {
    throw Error(ErrorKind::LevelTooSmall, "membership needs a point of level at least " + std::to_string(level_));
  }
  const LevelPoint prefix = p.level() == level_ ? p : project(p, level_);
  const auto it = std::ranges::upper_bound(intervals_, prefix, [](const LevelPoint& x, const LevelPoint& y) {
    return compare(x, y) < 0;
  }, &ClopenInterval::lo);
  if (it == intervals_.begin()) return false;
  return compare(prefix, std::prev(it)->hi()) <= 0;
}

bool ClopenSet::contains(const DigitProvider& x) const { return contains(x.prefix(level_)); }

std::vector<LevelPoint> ClopenSet::prefixes() const {
  std::vector<LevelPoint> out;
  for (const auto& iv : intervals_) {
    LevelPoint p = iv.lo();
    while (true) {
      out.push_back(p);
      if (p == iv.hi()) break;
      p = successor(p);
    }
  }
  return out;
}

std::string ClopenSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < intervals_.size(); ++i) {
    if (i != 0) out += " ∪ ";
    out += "[" + intervals_[i].lo().to_string() + ".." + intervals_[i].hi().to_string() + "]";
  }
  return out + "}@" + std::to_string(level_);
}

bool operator==(const ClopenSet& a, const ClopenSet& b) {
  if (!(a.system() == b.system())) return false;
  const std::size_t level = std::max(a.level(), b.level());
  return RangeList::of(a, level) == RangeList::of(b, level);
}

// ---------------------------------------------------------------------------

ClopenSet from_paper_endpoints(const LevelPoint& a, const LevelPoint& b) {
  require_same_system(a.system(), b.system());
  const auto order = compare(a, b);
  if (order == 0) throw Error(ErrorKind::EmptyInterval, "[a, a') is empty for a = " + a.to_string());
  if (order > 0) throw Error(ErrorKind::EmptyInterval, a.to_string() + " lies above " + b.to_string());
  const std::size_t level = std::max(a.level(), b.level());
  LevelPoint lo = a.level() == level ? a : embed(a, level);
  LevelPoint hi = predecessor(b.level() == level ? b : embed(b, level));
  std::vector<ClopenInterval> one;
  one.emplace_back(std::move(lo), std::move(hi));
  return ClopenSet(a.system(), level, std::move(one));
}

ClopenSet refine(const ClopenSet& s, std::size_t m) {
  if (m < s.level()) {
    throw Error(ErrorKind::LevelTooSmall,
                "cannot refine level " + std::to_string(s.level()) + " to level " + std::to_string(m));
  }
  if (m == s.level()) return s;
  return RangeList::build(s.system(), m, RangeList::of(s, m));
}

ClopenSet set_union(const ClopenSet& s, const ClopenSet& t) {
  require_same_system(s.system(), t.system());
  const std::size_t level = std::max(s.level(), t.level());
  auto ranges = RangeList::of(s, level);
  auto more = RangeList::of(t, level);
  ranges.insert(ranges.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
  return RangeList::build(s.system(), level, std::move(ranges));
}

ClopenSet set_intersect(const ClopenSet& s, const ClopenSet& t) {
  require_same_system(s.system(), t.system());
  const std::size_t level = std::max(s.level(), t.level());
  const auto a = RangeList::of(s, level);
  const auto b = RangeList::of(t, level);
  std::vector<RangeList::Range> out;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    const BigInt& lo = std::max(a[i].first, b[j].first);
    const BigInt& hi = std::min(a[i].second, b[j].second);
    if (lo <= hi) out.emplace_back(lo, hi);
    if (a[i].second < b[j].second) {
      ++i;
    } else {
      ++j;
    }
  }
  return RangeList::build(s.system(), level, std::move(out));
}

ClopenSet set_complement(const ClopenSet& s) {
  const auto ranges = RangeList::of(s, s.level());
  std::vector<RangeList::Range> gaps;
  BigInt next = 0;
  for (const auto& [lo, hi] : ranges) {
    if (next < lo) gaps.emplace_back(next, lo - 1);
    next = hi + 1;
  }
  const BigInt size = s.system().level_size(s.level());
  if (next < size) gaps.emplace_back(next, size - 1);
  return RangeList::build(s.system(), s.level(), std::move(gaps));
}

ClopenSet set_difference(const ClopenSet& s, const ClopenSet& t) { return set_intersect(s, set_complement(t)); }

std::vector<ClopenSet> partition_atoms(std::span<const ClopenSet> generators, const RadixSystem& system) {
  std::size_t level = 0;
  for (const auto& g : generators) {
    require_same_system(system, g.system());
    level = std::max(level, g.level());
  }
  if (generators.empty()) return {ClopenSet::full(system, 0)};

  std::vector<std::vector<RangeList::Range>> member;
  std::vector<BigInt> cuts{0, system.level_size(level)};
  for (const auto& g : generators) {
    member.push_back(RangeList::of(g, level));
    for (const auto& [lo, hi] : member.back()) {
      cuts.push_back(lo);
      cuts.push_back(hi + 1);
    }
  }
  std::ranges::sort(cuts);
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  // Each elementary segment between consecutive cuts has a constant membership
  // signature; an atom is the union of the segments sharing a signature.
  std::map<std::vector<bool>, std::vector<RangeList::Range>> by_signature;
  std::vector<std::vector<bool>> order;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    std::vector<bool> signature(member.size());
    for (std::size_t g = 0; g < member.size(); ++g) signature[g] = RangeList::covers(member[g], cuts[k]);
    auto [it, inserted] = by_signature.try_emplace(signature);
    if (inserted) order.push_back(signature);
    it->second.emplace_back(cuts[k], cuts[k + 1] - 1);
  }

  std::vector<ClopenSet> atoms;
  atoms.reserve(order.size());
  for (const auto& signature : order) {
    atoms.push_back(RangeList::build(system, level, std::move(by_signature[signature])));
  }
  return atoms;
}

std::vector<ClopenSet> partition_atoms(std::span<const ClopenSet> generators) {
  if (generators.empty()) throw Error(ErrorKind::InvalidArgument, "no generators: the radix system is unknown");
  return partition_atoms(generators, generators.front().system());
}

}  // namespace cantor
