#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "cantor/radix.hpp"

namespace cantor {

/// { x ∈ C : lo ≤ prefix_n(x) ≤ hi } for lo ≤ hi in C_n, i.e. the preimage of a
/// lexicographic interval of C_n under the level-n projection.
class ClopenInterval {
 public:
  ClopenInterval(LevelPoint&& lo, LevelPoint&& hi);
  ClopenInterval(const LevelPoint& lo, const LevelPoint& hi) : ClopenInterval(lo, hi, Copy{}) {}

  std::size_t level() const noexcept { return lo_.level(); }
  const LevelPoint& lo() const noexcept { return lo_; }
  const LevelPoint& hi() const noexcept { return hi_; }

  friend bool operator==(const ClopenInterval&, const ClopenInterval&) = default;

 private:
  struct Copy {};
  ClopenInterval(const LevelPoint& lo, const LevelPoint& hi, Copy);
  void check() const;

  LevelPoint lo_;
  LevelPoint hi_;
};

/// A clopen subset of C held at a fixed level as a canonical list of prefix
/// intervals: sorted, pairwise disjoint and never adjacent. ∅ is the empty
/// list and C is the single interval [bottom, top].
class ClopenSet {
 public:
  static ClopenSet empty(RadixSystem system, std::size_t level);
  static ClopenSet full(RadixSystem system, std::size_t level);
  static ClopenSet interval(LevelPoint lo, LevelPoint hi);
  /// Normalizes an arbitrary (unsorted, overlapping, adjacent) interval list.
  static ClopenSet from_intervals(RadixSystem system, std::size_t level, std::span<const ClopenInterval> intervals);
  /// Union of the cylinder sets of the given level-n prefixes.
  static ClopenSet from_prefixes(RadixSystem system, std::size_t level, std::span<const LevelPoint> prefixes);

  const RadixSystem& system() const noexcept { return system_; }
  std::size_t level() const noexcept { return level_; }
  const std::vector<ClopenInterval>& intervals() const noexcept { return intervals_; }

  bool is_empty() const noexcept { return intervals_.empty(); }
  bool is_full() const;

  /// Membership of a point whose level is at least level().
  bool contains(const LevelPoint& p) const;
  bool contains(const DigitProvider& x) const;

  /// Level-n prefixes covered by the set, in lex order. Intended for small levels.
  std::vector<LevelPoint> prefixes() const;

  std::string to_string() const;

  /// Point-set equality: both sides are compared at their common refinement.
  friend bool operator==(const ClopenSet& a, const ClopenSet& b);

 private:
  ClopenSet(RadixSystem system, std::size_t level, std::vector<ClopenInterval> intervals)
      : system_(std::move(system)), level_(level), intervals_(std::move(intervals)) {}

  friend ClopenSet from_paper_endpoints(const LevelPoint& a, const LevelPoint& b);
  friend class RangeList;

  RadixSystem system_;
  std::size_t level_;
  std::vector<ClopenInterval> intervals_;
};

/// The set [a, b'] of points x with a ≤ x < b, i.e. prefixes in
/// [a, predecessor(b)]. Points at different levels are compared after
/// padding to the deeper level.
ClopenSet from_paper_endpoints(const LevelPoint& a, const LevelPoint& b);

ClopenSet refine(const ClopenSet& s, std::size_t m);
ClopenSet set_union(const ClopenSet& s, const ClopenSet& t);
ClopenSet set_intersect(const ClopenSet& s, const ClopenSet& t);
ClopenSet set_complement(const ClopenSet& s);
ClopenSet set_difference(const ClopenSet& s, const ClopenSet& t);

/// Atoms of the finite Boolean subalgebra generated by `generators`: nonempty,
/// pairwise disjoint, covering C, and each generator is a union of atoms.
/// With no generators the single atom is C (at level 0).
std::vector<ClopenSet> partition_atoms(std::span<const ClopenSet> generators, const RadixSystem& system);
std::vector<ClopenSet> partition_atoms(std::span<const ClopenSet> generators);

}  // namespace cantor
