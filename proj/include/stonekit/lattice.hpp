#ifndef STONEKIT_LATTICE_HPP
#define STONEKIT_LATTICE_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "stonekit/bits.hpp"
#include "stonekit/order.hpp"

namespace stonekit {

/// Finite bounded lattice with precomputed meet and join tables.
/// Not necessarily distributive; see DistLattice.
class Lattice {
 public:
  /// Throws NotALattice (naming the offending pair) when some pair lacks a
  /// meet or a join, or when the order is empty.
  static Lattice from_order(FinPoset order);

  const FinPoset& order() const { return order_; }
  std::size_t size() const { return order_.size(); }
  const std::string& name(std::size_t a) const { return order_.name(a); }
  std::size_t at(std::string_view name) const { return order_.at(name); }

  bool leq(std::size_t a, std::size_t b) const { return order_.leq(a, b); }
  std::size_t meet(std::size_t a, std::size_t b) const { return meet_[a * size() + b]; }
  std::size_t join(std::size_t a, std::size_t b) const { return join_[a * size() + b]; }
  std::size_t bot() const { return bot_; }
  std::size_t top() const { return top_; }
  Mask all() const { return order_.all(); }
  Mask upset(std::size_t a) const { return order_.upset(a); }
  Mask downset(std::size_t a) const { return order_.downset(a); }

  /// Join of every member of s; bot for the empty set.
  std::size_t join_of(Mask s) const;
  /// Meet of every member of s; top for the empty set.
  std::size_t meet_of(Mask s) const;

  friend bool operator==(const Lattice&, const Lattice&) = default;

 private:
  FinPoset order_;
  std::vector<std::size_t> meet_;
  std::vector<std::size_t> join_;
  std::size_t bot_ = 0;
  std::size_t top_ = 0;
};

struct DistributivityWitness {
  std::size_t a, b, c;  // a meet (b join c) differs from (a meet b) join (a meet c)
};

std::optional<DistributivityWitness> distributivity_witness(const Lattice& l);
bool is_distributive(const Lattice& l);

/// A lattice known to satisfy the distributive law. Finite distributive
/// lattices are exactly the finite frames, so this type also serves as the
/// frame type.
class DistLattice : public Lattice {
 public:
  /// Throws NotDistributive with the witness triple.
  explicit DistLattice(Lattice l);
  static DistLattice from_order(FinPoset order) { return DistLattice(Lattice::from_order(std::move(order))); }
};

using LatticeRef = std::shared_ptr<const DistLattice>;

inline LatticeRef share(DistLattice l) { return std::make_shared<const DistLattice>(std::move(l)); }

/// Same lattice, by identity or by structure.
inline bool same_lattice(const LatticeRef& a, const LatticeRef& b) { return a == b || (a && b && *a == *b); }

/// The two-element lattice {0 < 1}.
const LatticeRef& two_lattice();

/// A finite lattice whose elements are sets, ordered by inclusion.
struct SetLattice {
  LatticeRef lattice;
  std::vector<Mask> sets;  // sets[i] is element i

  std::optional<std::size_t> find(Mask s) const;
  /// Throws InvalidInput when s is not an element.
  std::size_t element_of(Mask s) const;
};

/// Orders the given distinct sets by inclusion. `names[i]` names `sets[i]`.
/// Throws NotALattice / NotDistributive when inclusion is not a distributive lattice.
SetLattice inclusion_lattice(const std::vector<Mask>& sets, const std::vector<std::string>& names);

/// Map between lattices preserving binary meets and joins, bottom and top.
class LatticeHom {
 public:
  /// Throws NotAHomomorphism describing the first violated condition.
  LatticeHom(LatticeRef source, LatticeRef target, std::vector<std::size_t> assignment);

  static LatticeHom identity(const LatticeRef& l);

  const LatticeRef& source() const { return source_; }
  const LatticeRef& target() const { return target_; }
  std::size_t operator()(std::size_t a) const { return assignment_[a]; }
  const std::vector<std::size_t>& assignment() const { return assignment_; }

  bool injective() const;
  bool surjective() const;

  friend bool operator==(const LatticeHom& f, const LatticeHom& g) {
    return f.assignment_ == g.assignment_ && same_lattice(f.source_, g.source_) &&
           same_lattice(f.target_, g.target_);
  }

 private:
  LatticeRef source_;
  LatticeRef target_;
  std::vector<std::size_t> assignment_;
};

/// g after f. Throws TypeMismatch unless f.target is g.source.
LatticeHom compose(const LatticeHom& g, const LatticeHom& f);
std::optional<LatticeHom> inverse(const LatticeHom& f);

/// Description of the first homomorphism condition the assignment breaks.
std::optional<std::string> hom_violation(const Lattice& source, const Lattice& target,
                                         const std::vector<std::size_t>& assignment);
inline bool is_lattice_hom(const Lattice& source, const Lattice& target,
                           const std::vector<std::size_t>& assignment) {
  return !hom_violation(source, target, assignment);
}

/// All lattice homomorphisms source -> target, by backtracking in canonical order.
std::vector<std::vector<std::size_t>> enumerate_homs(const Lattice& source, const Lattice& target);

/// Lattice isomorphism a -> b, if any.
std::optional<std::vector<std::size_t>> find_lattice_isomorphism(const Lattice& a, const Lattice& b);

// ---------------------------------------------------------------------------
// Ideals and prime filters

/// Nonempty, down-closed, join-closed subset.
struct Ideal {
  LatticeRef home;
  Mask members = 0;

  friend bool operator==(const Ideal& a, const Ideal& b) {
    return a.members == b.members && same_lattice(a.home, b.home);
  }
};

/// Proper, up-closed, meet-closed subset containing top, with the prime property.
struct PrimeFilter {
  LatticeRef home;
  Mask members = 0;

  friend bool operator==(const PrimeFilter& a, const PrimeFilter& b) {
    return a.members == b.members && same_lattice(a.home, b.home);
  }
};

bool is_ideal(const Lattice& l, Mask s);
bool is_filter(const Lattice& l, Mask s);
bool is_prime_filter(const Lattice& l, Mask s);

/// Throws ForeignIdeal if the members do not form an ideal of l.
Ideal make_ideal(const LatticeRef& l, Mask s);

/// Join in the ideal lattice: every finite join i1 v ... v in with ik drawn
/// from members of the family. The empty family gives {bot}.
Ideal ideal_join(const LatticeRef& l, std::span<const Ideal> family);

/// Every ideal of l ordered by inclusion. Elements are named "dn(a)" when the
/// ideal has a largest member a, and by their member set otherwise.
SetLattice ideal_lattice(const LatticeRef& l);

/// {b | b <= f(a) for some a in I}.
Ideal ideal_map_image(const LatticeHom& f, const Ideal& ideal);
/// The functor on morphisms: the homomorphism between ideal lattices.
LatticeHom ideal_map(const LatticeHom& f);

/// Prime filters of l in increasing mask order.
std::vector<PrimeFilter> prime_filters(const LatticeRef& l);
/// Every lattice homomorphism l -> 2, in increasing order of their 1-sets.
std::vector<LatticeHom> homs_to_2(const LatticeRef& l);

/// Unit of the ideal monad: the principal ideal of a.
Ideal monad_unit_down(const LatticeRef& l, std::size_t a);
/// The unit as a homomorphism l -> ideal lattice of l.
LatticeHom down_hom(const LatticeRef& l);

/// Multiplication of the ideal monad: union of the member ideals of an ideal
/// of the ideal lattice. Throws ForeignIdeal unless `family` lives over
/// ideal_lattice(l).
Ideal monad_mult_union(const LatticeRef& l, const Ideal& family);
/// The multiplication as a homomorphism from the ideal lattice of the ideal lattice.
LatticeHom union_hom(const LatticeRef& l);

/// Canonical algebra structure of the ideal monad on l: I -> join of I.
LatticeHom frame_join_algebra(const LatticeRef& l);

}  // namespace stonekit

#endif
