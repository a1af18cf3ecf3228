#ifndef STONEKIT_ORDER_HPP
#define STONEKIT_ORDER_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stonekit/bits.hpp"

namespace stonekit {

class DistLattice;

/// Finite partial order on named elements.
///
/// Elements are stored in canonical order: the linear extension of the order
/// obtained by repeatedly taking the minimal remaining element with the
/// smallest name. Every index-based API refers to that order.
class FinPoset {
 public:
  FinPoset() = default;

  /// Builds a poset from a reflexive, transitive, antisymmetric relation given
  /// as up-sets (`up[i]` holds every j with i <= j). The result is canonically
  /// reordered; `original` receives, for each new index, the input index.
  static FinPoset from_relation(std::vector<std::string> names, std::vector<Mask> up,
                                std::vector<std::size_t>* original = nullptr);

  std::size_t size() const { return names_.size(); }
  bool empty() const { return names_.empty(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }

  bool leq(std::size_t i, std::size_t j) const { return contains(up_[i], j); }
  Mask upset(std::size_t i) const { return up_[i]; }
  Mask downset(std::size_t i) const { return down_[i]; }
  Mask all() const { return full_mask(size()); }

  std::optional<std::size_t> index_of(std::string_view name) const;
  /// Like index_of but throws InvalidInput for unknown names.
  std::size_t at(std::string_view name) const;

  /// Number of pairs (i, j) with i <= j, reflexive pairs included.
  std::size_t pair_count() const;
  /// Cover relation (i < j with nothing strictly between), sorted.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;
  /// Elements of s with no strictly smaller element in s.
  Mask minimal(Mask s) const;
  Mask maximal(Mask s) const;

  bool is_downset(Mask s) const;
  bool is_upset(Mask s) const;
  Mask down_closure(Mask s) const;
  Mask up_closure(Mask s) const;

  /// Subposet on the members of s, keeping names.
  FinPoset restrict_to(Mask s) const;

  friend bool operator==(const FinPoset&, const FinPoset&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<Mask> up_;
  std::vector<Mask> down_;
};

/// Order-preserving map between finite posets.
class MonotoneMap {
 public:
  /// Throws InvalidInput when the assignment is not total or not monotone.
  MonotoneMap(FinPoset source, FinPoset target, std::vector<std::size_t> assignment);

  const FinPoset& source() const { return source_; }
  const FinPoset& target() const { return target_; }
  std::size_t operator()(std::size_t x) const { return assignment_[x]; }
  const std::vector<std::size_t>& assignment() const { return assignment_; }

 private:
  FinPoset source_;
  FinPoset target_;
  std::vector<std::size_t> assignment_;
};

/// Reflexive-transitive closure of the generating pairs.
/// Throws CycleError when the closure is not antisymmetric and InvalidInput
/// when a pair names an undeclared element.
FinPoset order_closure(const std::vector<std::string>& elements,
                       const std::vector<std::pair<std::string, std::string>>& pairs);

/// Lattice of down-closed subsets of P under inclusion (Birkhoff).
DistLattice downset_lattice(const FinPoset& p);

/// Subposet of join-irreducible elements (non-bottom, exactly one lower cover).
FinPoset join_irreducibles(const DistLattice& l);

/// Every down-closed subset of p, in increasing numeric mask order.
std::vector<Mask> enumerate_downsets(const FinPoset& p);
/// Every up-closed subset of p, in increasing numeric mask order.
std::vector<Mask> enumerate_upsets(const FinPoset& p);

/// Order isomorphism a -> b found by backtracking, if one exists.
std::optional<std::vector<std::size_t>> find_poset_isomorphism(const FinPoset& a, const FinPoset& b);

/// "{x,y}" rendering of a subset, members in index order.
std::string subset_name(const std::vector<std::string>& names, Mask s);

}  // namespace stonekit

#endif
