#pragma once

#include <optional>

#include "cantor/clopen.hpp"

namespace cantor {

/// Outcome of comparing μ_C(S) with λ(φ(S)). `equal` is computed, never assumed.
struct PushforwardReport {
  BigRational haar_value;
  BigRational lebesgue_value;
  bool equal = false;
  /// On failure, an interval of the set whose two values disagree.
  std::optional<ClopenInterval> witness;
};

/// μ_C(s) = Σ (rank(hi) − rank(lo) + 1) / |C_n| over the canonical intervals.
BigRational haar_measure(const ClopenSet& s);

/// Counting measure of the single interval, normalized by |C_n|.
BigRational haar_measure(const ClopenInterval& iv);
/// Same, for the interval with prefix endpoints lo ≤ hi of one level.
BigRational haar_measure(const LevelPoint& lo, const LevelPoint& hi);

struct ImageInterval {
  BigRational left;
  BigRational right;
};

/// φ maps the interval onto [φ(lo), φ(successor(hi))], reading the successor
/// of the level maximum as 1.
ImageInterval phi_image(const ClopenInterval& iv);

/// λ(φ(s)): the length of the union of the interval images. Images are merged
/// before measuring, so shared endpoints are counted once.
BigRational lebesgue_of_image(const ClopenSet& s);

PushforwardReport check_pushforward_interval(const LevelPoint& a, const LevelPoint& b);
PushforwardReport check_openmap(const ClopenSet& s);

/// μ_C(s) = μ_C(refine(s, m)).
bool level_consistency(const ClopenSet& s, std::size_t m);

/// g + S for g ∈ C_n and S held at level n, with the componentwise group law.
/// Enumerates the points of S; intended for desk-scale levels.
ClopenSet translate(const ClopenSet& s, const LevelPoint& g);

}  // namespace cantor
