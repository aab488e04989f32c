#include "cantor/haar.hpp"

#include <algorithm>
#include <vector>

namespace cantor {

BigRational haar_measure(const LevelPoint& lo, const LevelPoint& hi) {
  if (!(lo.system() == hi.system())) {
    throw Error(ErrorKind::MixedSystems, lo.system().describe() + " vs " + hi.system().describe());
  }
  const auto reversed = [&] {
    return Error(ErrorKind::InvalidArgument, "need lo <= hi at one level, got " + lo.to_string() + ".." + hi.to_string());
  };
  if (lo.level() != hi.level()) throw reversed();
  const RadixSystem& sys = lo.system();
  if (const auto size = sys.level_size_u64(lo.level())) {
    const Digit* radices = sys.leading_radices().data();
    const auto da = lo.digits();
    const auto db = hi.digits();
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    for (std::size_t i = 0; i < da.size(); ++i) {
      a = a * radices[i] + da[i];
      b = b * radices[i] + db[i];
    }
    if (a > b) throw reversed();
    return BigRational(static_cast<std::int64_t>(b - a + 1), static_cast<std::int64_t>(*size));
  }
  if (compare(lo, hi) > 0) throw reversed();
  return BigRational(rank(hi) - rank(lo) + 1, sys.level_size(lo.level()));
}

BigRational haar_measure(const ClopenInterval& iv) { return haar_measure(iv.lo(), iv.hi()); }

BigRational haar_measure(const ClopenSet& s) {
  const auto& intervals = s.intervals();
  if (intervals.empty()) return BigRational(0);
  if (intervals.size() == 1) return haar_measure(intervals.front());
  if (const auto size = s.system().level_size_u64(s.level())) {
    std::uint64_t count = 0;
    for (const auto& iv : intervals) {
      count += *rank_u64(iv.hi()) - *rank_u64(iv.lo()) + 1;
    }
    return BigRational(static_cast<std::int64_t>(count), static_cast<std::int64_t>(*size));
  }
  BigInt count = 0;
  for (const auto& iv : intervals) count += rank(iv.hi()) - rank(iv.lo()) + 1;
  return BigRational(count, s.system().level_size(s.level()));
}

ImageInterval phi_image(const ClopenInterval& iv) {
  BigRational left = phi(iv.lo());
  BigRational right = iv.hi().is_top() ? BigRational(1) : phi(successor(iv.hi()));
  return {std::move(left), std::move(right)};
}

BigRational lebesgue_of_image(const ClopenSet& s) {
  std::vector<ImageInterval> images;
  images.reserve(s.intervals().size());
  for (const auto& iv : s.intervals()) images.push_back(phi_image(iv));
  std::ranges::sort(images, [](const ImageInterval& a, const ImageInterval& b) { return a.left < b.left; });

  BigRational total;
  std::optional<ImageInterval> run;
  for (auto& img : images) {
    if (run && img.left <= run->right) {
      if (img.right > run->right) run->right = std::move(img.right);
      continue;
    }
    if (run) total += run->right - run->left;
    run = std::move(img);
  }
  if (run) total += run->right - run->left;
  return total;
}

PushforwardReport check_pushforward_interval(const LevelPoint& a, const LevelPoint& b) {
  const ClopenSet set = from_paper_endpoints(a, b);
  PushforwardReport report{haar_measure(set), phi(b) - phi(a), false, std::nullopt};
  report.equal = report.haar_value == report.lebesgue_value;
  if (!report.equal) report.witness = set.intervals().front();
  return report;
}

PushforwardReport check_openmap(const ClopenSet& s) {
  PushforwardReport report{haar_measure(s), lebesgue_of_image(s), false, std::nullopt};
  report.equal = report.haar_value == report.lebesgue_value;
  if (!report.equal) {
    for (const auto& iv : s.intervals()) {
      const auto img = phi_image(iv);
      if (haar_measure(iv) != img.right - img.left) {
        report.witness = iv;
        break;
      }
    }
  }
  return report;
}

bool level_consistency(const ClopenSet& s, std::size_t m) { return haar_measure(s) == haar_measure(refine(s, m)); }

ClopenSet translate(const ClopenSet& s, const LevelPoint& g) {
  if (g.level() != s.level()) throw Error(ErrorKind::InvalidArgument, "translation needs a point of the set's level");
  std::vector<LevelPoint> moved;
  for (const auto& p : s.prefixes()) moved.push_back(group_add(p, g));
  return ClopenSet::from_prefixes(s.system(), s.level(), moved);
}

}  // namespace cantor
