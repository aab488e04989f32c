#include "cantor/group.hpp"

#include <array>
#include <utility>

namespace cantor {

FiniteGroup::FiniteGroup(std::size_t order, std::vector<Element> table, Element identity)
    : order_(order), table_(std::move(table)), identity_(identity) {
  if (order_ == 0) throw Error(ErrorKind::InvalidArgument, "a group has at least one element");
  if (table_.size() != order_ * order_) {
    throw Error(ErrorKind::InvalidArgument, "Cayley table of order " + std::to_string(order_) + " needs " +
                                                std::to_string(order_ * order_) + " entries");
  }
  if (identity_ >= order_) throw Error(ErrorKind::InvalidArgument, "identity index out of range");
  for (const Element e : table_) {
    if (e >= order_) throw Error(ErrorKind::InvalidArgument, "table entry " + std::to_string(e) + " out of range");
  }
}

FiniteGroup trivial_group() { return FiniteGroup(1, {0}, 0); }

FiniteGroup cyclic_group(std::size_t n) {
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = static_cast<Element>((a + b) % n);
  }
  return FiniteGroup(n, std::move(table), 0);
}

FiniteGroup dihedral_group(std::size_t n) {
  const std::size_t order = 2 * n;
  std::vector<Element> table(order * order);
  const auto rot = [n](std::size_t k) { return static_cast<Element>(k % n); };
  const auto ref = [n](std::size_t k) { return static_cast<Element>(n + k % n); };
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = 0; b < order; ++b) {
      const bool sa = a >= n;
      const bool sb = b >= n;
      const std::size_t ka = a % n;
      const std::size_t kb = b % n;
      Element c;
      if (!sa && !sb) {
        c = rot(ka + kb);  // r^a r^b
      } else if (!sa && sb) {
        c = ref(kb + n - ka);  // r^a s r^b = s r^{b-a}
      } else if (sa && !sb) {
        c = ref(ka + kb);  // s r^a r^b
      } else {
        c = rot(kb + n - ka);  // s r^a s r^b = r^{b-a}
      }
      table[a * order + b] = c;
    }
  }
  return FiniteGroup(order, std::move(table), 0);
}

FiniteGroup quaternion_group() {
  // unit products for 1, i, j, k as (negated, unit)
  constexpr std::array<std::array<std::pair<bool, int>, 4>, 4> units{{
      {{{false, 0}, {false, 1}, {false, 2}, {false, 3}}},
      {{{false, 1}, {true, 0}, {false, 3}, {true, 2}}},
      {{{false, 2}, {true, 3}, {true, 0}, {false, 1}}},
      {{{false, 3}, {false, 2}, {true, 1}, {true, 0}}},
  }};
  std::vector<Element> table(64);
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      const auto [neg, unit] = units[a % 4][b % 4];
      const bool negative = neg ^ (a >= 4) ^ (b >= 4);
      table[a * 8 + b] = static_cast<Element>(unit + (negative ? 4 : 0));
    }
  }
  return FiniteGroup(8, std::move(table), 0);
}

std::optional<GroupViolation> validate_group(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<Element> seen(n);
  for (Element a = 0; a < n; ++a) {
    std::vector<bool> in_row(n, false);
    std::vector<bool> in_col(n, false);
    for (Element b = 0; b < n; ++b) {
      const Element r = g.mul(a, b);
      const Element c = g.mul(b, a);
      if (in_row[r]) {
        return GroupViolation{GroupViolationKind::NotLatin, a, b, r,
                              "row " + std::to_string(a) + " repeats entry " + std::to_string(r)};
      }
      if (in_col[c]) {
        return GroupViolation{GroupViolationKind::NotLatin, b, a, c,
                              "column " + std::to_string(a) + " repeats entry " + std::to_string(c)};
      }
      in_row[r] = true;
      in_col[c] = true;
    }
  }
  const Element e = g.identity();
  for (Element x = 0; x < n; ++x) {
    if (g.mul(e, x) != x || g.mul(x, e) != x) {
      return GroupViolation{GroupViolationKind::NoIdentity, e, x, 0,
                            std::to_string(e) + " is not an identity for " + std::to_string(x)};
    }
  }
  for (Element x = 0; x < n; ++x) {
    bool found = false;
    for (Element y = 0; y < n && !found; ++y) found = g.mul(x, y) == e && g.mul(y, x) == e;
    if (!found) {
      return GroupViolation{GroupViolationKind::NoInverse, x, 0, 0,
                            std::to_string(x) + " has no two-sided inverse"};
    }
  }
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      const Element ab = g.mul(a, b);
      for (Element c = 0; c < n; ++c) {
        if (g.mul(ab, c) != g.mul(a, g.mul(b, c))) {
          return GroupViolation{GroupViolationKind::NotAssociative, a, b, c,
                                "(" + std::to_string(a) + "·" + std::to_string(b) + ")·" + std::to_string(c) +
                                    " differs from " + std::to_string(a) + "·(" + std::to_string(b) + "·" +
                                    std::to_string(c) + ")"};
        }
      }
    }
  }
  return std::nullopt;
}

GroupHom::GroupHom(FiniteGroup source, FiniteGroup target, std::vector<Element> map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
  if (map_.size() != source_.order()) {
    throw Error(ErrorKind::InvalidArgument, "homomorphism needs one image per source element");
  }
  for (const Element y : map_) {
    if (y >= target_.order()) throw Error(ErrorKind::InvalidArgument, "image " + std::to_string(y) + " out of range");
  }
}

std::optional<HomViolation> validate_hom(const GroupHom& f) {
  const FiniteGroup& src = f.source();
  const FiniteGroup& dst = f.target();
  for (Element x = 0; x < src.order(); ++x) {
    for (Element y = 0; y < src.order(); ++y) {
      if (f(src.mul(x, y)) != dst.mul(f(x), f(y))) {
        return HomViolation{HomViolationKind::NotHomomorphism, x, y,
                            "f(" + std::to_string(x) + "·" + std::to_string(y) + ") != f(" + std::to_string(x) +
                                ")·f(" + std::to_string(y) + ")"};
      }
    }
  }
  std::vector<bool> hit(dst.order(), false);
  for (const Element y : f.map()) hit[y] = true;
  for (Element y = 0; y < dst.order(); ++y) {
    if (!hit[y]) {
      return HomViolation{HomViolationKind::NotSurjective, y, 0, std::to_string(y) + " is not in the image"};
    }
  }
  return std::nullopt;
}

GroupHom cyclic_reduction(std::size_t m, std::size_t n) {
  if (n == 0 || m % n != 0) throw Error(ErrorKind::InvalidArgument, "Z_m → Z_n needs n | m");
  std::vector<Element> map(m);
  for (std::size_t x = 0; x < m; ++x) map[x] = static_cast<Element>(x % n);
  return GroupHom(cyclic_group(m), cyclic_group(n), std::move(map));
}

GroupHom compose(const GroupHom& f, const GroupHom& g) {
  if (!(f.target() == g.source())) throw Error(ErrorKind::InvalidArgument, "composition of non-matching maps");
  std::vector<Element> map(f.source().order());
  for (Element x = 0; x < map.size(); ++x) map[x] = g(f(x));
  return GroupHom(f.source(), g.target(), std::move(map));
}

std::size_t kernel_size(const GroupHom& f) {
  std::size_t count = 0;
  for (const Element y : f.map()) count += y == f.target().identity();
  return count;
}

Tower::Tower(std::vector<FiniteGroup> levels, std::vector<GroupHom> steps)
    : levels_(std::move(levels)), steps_(std::move(steps)) {
  if (levels_.empty()) throw Error(ErrorKind::InvalidTower, "a tower needs at least one level");
  if (steps_.size() + 1 != levels_.size()) {
    throw Error(ErrorKind::InvalidTower, std::to_string(levels_.size()) + " levels need " +
                                             std::to_string(levels_.size() - 1) + " steps");
  }
  for (std::size_t k = 0; k < levels_.size(); ++k) {
    if (auto v = validate_group(levels_[k])) {
      throw Error(ErrorKind::InvalidTower, "level " + std::to_string(k + 1) + ": " + v->message);
    }
  }
  for (std::size_t k = 0; k < steps_.size(); ++k) {
    const GroupHom& step = steps_[k];
    if (!(step.source() == levels_[k + 1]) || !(step.target() == levels_[k])) {
      throw Error(ErrorKind::InvalidTower, "step " + std::to_string(k + 1) + " does not map level " +
                                               std::to_string(k + 2) + " to level " + std::to_string(k + 1));
    }
    if (auto v = validate_hom(step)) {
      throw Error(ErrorKind::InvalidTower, "step " + std::to_string(k + 1) + ": " + v->message);
    }
  }
}

RadixSystem abelianize_tower(const Tower& t) {
  const std::size_t base = t.levels().front().order();
  if (base < 2) throw Error(ErrorKind::TrivialBase, "the first quotient has order " + std::to_string(base));
  std::vector<Digit> radices{static_cast<Digit>(base)};
  for (std::size_t k = 0; k < t.steps().size(); ++k) {
    const std::size_t kernel = kernel_size(t.steps()[k]);
    if (kernel < 2) throw Error(ErrorKind::TrivialKernel, "step " + std::to_string(k + 1) + " has trivial kernel");
    radices.push_back(static_cast<Digit>(kernel));
  }
  return RadixSystem(std::move(radices), {2});
}

std::vector<BigRational> pushforward(const GroupHom& f, std::span<const BigRational> masses) {
  if (masses.size() != f.source().order()) throw Error(ErrorKind::InvalidArgument, "one mass per source element");
  std::vector<BigRational> out(f.target().order());
  for (Element x = 0; x < masses.size(); ++x) out[f(x)] += masses[x];
  return out;
}

UniformPushforward uniform_pushforward_check(const GroupHom& f) {
  UniformPushforward report;
  const auto source_haar = haar_finite(f.source());
  report.masses = pushforward(f, source_haar);
  report.expected = BigRational(1, static_cast<std::int64_t>(f.target().order()));
  report.equal = std::ranges::all_of(report.masses, [&](const BigRational& m) { return m == report.expected; });
  return report;
}

std::vector<BigRational> haar_finite(const FiniteGroup& g) {
  return std::vector<BigRational>(g.order(), BigRational(1, static_cast<std::int64_t>(g.order())));
}

}  // namespace cantor
