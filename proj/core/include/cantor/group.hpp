#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cantor/big_rational.hpp"
#include "cantor/radix.hpp"

namespace cantor {

using Element = std::uint32_t;

/// A finite group given by its Cayley table. Construction checks only the
/// shape of the data; the group axioms are checked by validate_group.
class FiniteGroup {
 public:
  FiniteGroup(std::size_t order, std::vector<Element> table, Element identity);

  std::size_t order() const noexcept { return order_; }
  Element identity() const noexcept { return identity_; }
  Element mul(Element a, Element b) const noexcept { return table_[a * order_ + b]; }
  std::span<const Element> row(Element a) const noexcept { return {table_.data() + a * order_, order_}; }
  const std::vector<Element>& table() const noexcept { return table_; }

  friend bool operator==(const FiniteGroup&, const FiniteGroup&) = default;

 private:
  std::size_t order_;
  std::vector<Element> table_;
  Element identity_;
};

FiniteGroup trivial_group();
FiniteGroup cyclic_group(std::size_t n);
/// Symmetries of the regular n-gon, order 2n: element r^k is k, s r^k is n + k.
FiniteGroup dihedral_group(std::size_t n);
/// {±1, ±i, ±j, ±k} indexed 1, i, j, k, -1, -i, -j, -k.
FiniteGroup quaternion_group();

enum class GroupViolationKind { NotLatin, NoIdentity, NoInverse, NotAssociative };

struct GroupViolation {
  GroupViolationKind kind;
  Element a = 0;
  Element b = 0;
  Element c = 0;
  std::string message;
};

/// Empty on success; otherwise the first failing witness.
std::optional<GroupViolation> validate_group(const FiniteGroup& g);

/// A map of Cayley-table groups, one target index per source element.
class GroupHom {
 public:
  GroupHom(FiniteGroup source, FiniteGroup target, std::vector<Element> map);

  const FiniteGroup& source() const noexcept { return source_; }
  const FiniteGroup& target() const noexcept { return target_; }
  const std::vector<Element>& map() const noexcept { return map_; }
  Element operator()(Element x) const noexcept { return map_[x]; }

 private:
  FiniteGroup source_;
  FiniteGroup target_;
  std::vector<Element> map_;
};

enum class HomViolationKind { NotHomomorphism, NotSurjective };

struct HomViolation {
  HomViolationKind kind;
  Element x = 0;
  Element y = 0;
  std::string message;
};

std::optional<HomViolation> validate_hom(const GroupHom& f);

/// x ↦ x mod n from Z_m onto Z_n (n | m).
GroupHom cyclic_reduction(std::size_t m, std::size_t n);
/// (g ∘ f): f's target must equal g's source.
GroupHom compose(const GroupHom& f, const GroupHom& g);

/// |{x : f(x) = e}|.
std::size_t kernel_size(const GroupHom& f);

/// A strict chain G/N_1 ← G/N_2 ← ... of finite quotients. levels[0] is the
/// smallest; steps[k] maps levels[k+1] onto levels[k].
class Tower {
 public:
  /// Checks group axioms, homomorphism laws and that each step connects the
  /// adjacent levels; throws InvalidTower otherwise. Kernel sizes are left to
  /// abelianize_tower.
  Tower(std::vector<FiniteGroup> levels, std::vector<GroupHom> steps);

  const std::vector<FiniteGroup>& levels() const noexcept { return levels_; }
  const std::vector<GroupHom>& steps() const noexcept { return steps_; }

 private:
  std::vector<FiniteGroup> levels_;
  std::vector<GroupHom> steps_;
};

/// Radices n_1 = |G/N_1|, n_k = |ker(G/N_k → G/N_{k−1})|, extended by the
/// period [2]. The product n_1 ⋯ n_k equals |G/N_k| at every level.
RadixSystem abelianize_tower(const Tower& t);

/// Distribution of f(x) for x uniform on the source, against uniform on the target.
struct UniformPushforward {
  std::vector<BigRational> masses;
  BigRational expected;
  bool equal = false;
};

UniformPushforward uniform_pushforward_check(const GroupHom& f);

/// Image of an arbitrary distribution on f's source.
std::vector<BigRational> pushforward(const GroupHom& f, std::span<const BigRational> masses);

/// Normalized counting measure.
std::vector<BigRational> haar_finite(const FiniteGroup& g);

}  // namespace cantor
