#ifndef STONEKIT_FRAME_HPP
#define STONEKIT_FRAME_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stonekit/lattice.hpp"
#include "stonekit/space.hpp"
#include "stonekit/verdict.hpp"

namespace stonekit {

/// Way-below relation: rows[a] holds every b with a << b.
struct WayBelowRelation {
  LatticeRef home;
  std::vector<Mask> rows;

  bool holds(std::size_t a, std::size_t b) const { return contains(rows[a], b); }
  std::size_t pair_count() const;
};

/// a << b iff every S with b <= join(S) has a finite G within S with
/// a <= join(G). Computed from the definition over all subsets of the carrier,
/// so carriers are limited to 24 elements (BudgetExceeded otherwise).
WayBelowRelation way_below(const LatticeRef& l);

/// The order relation in the same row format, for comparison with way_below.
WayBelowRelation order_relation(const LatticeRef& l);

/// Way-below is a sublattice of L x L containing (0,0) and (1,1), and every
/// element is the join of what lies way below it.
Verdict is_stably_compact(const LatticeRef& l);
/// 1 << 1.
bool is_compact_frame(const LatticeRef& l);

/// Largest x with x meet a = bot.
std::size_t pseudocomplement(const Lattice& l, std::size_t a);
/// rows[a] holds every b with a well inside b (a* join b = top).
std::vector<Mask> well_inside(const Lattice& l);
/// Every b is the join of the elements well inside it.
bool is_regular(const Lattice& l);
/// Every element has a complement (searched directly, not via a*).
bool is_boolean(const Lattice& l);

/// Compact regular coreflection: the sublattice of complemented elements
/// with its inclusion homomorphism.
struct Coreflection {
  LatticeRef center;
  LatticeHom inclusion;
};
Coreflection creg_coreflection(const LatticeRef& l);

/// Every homomorphism from a Boolean algebra 2^k (k <= max_rank) into l
/// factors through the inclusion in exactly one way.
Verdict check_creg_couniversality(const LatticeRef& l, std::size_t max_rank = 3);

/// Boolean algebra 2^k: the subsets of {0..k-1}.
LatticeRef boolean_lattice(std::size_t k);

/// Space of homomorphisms l -> 2 with opens Sigma_a = {p | p(a) = 1}.
struct Spectrum {
  SpaceRef space;
  std::vector<Mask> filters;  // filters[p] is the 1-set of point p

  std::size_t point_of(Mask filter) const;
  /// Mask of the points p with p(a) = 1.
  Mask basic_open(std::size_t a) const;
};
Spectrum spectrum(const LatticeRef& l);

/// The homomorphism a -> Sigma_a into the open-set lattice of the spectrum,
/// and whether it is bijective.
struct SpatialityResult {
  LatticeHom hom;
  bool iso = false;
};
SpatialityResult spatiality_iso(const LatticeRef& l);

/// Comultiplication of the ideal comonad: I -> {J | join(J) in I}, an ideal
/// of the ideal lattice.
Ideal comonad_c(const LatticeRef& l, const Ideal& ideal);
/// The same map computed as the ideal functor applied to the principal-ideal
/// embedding.
Ideal comonad_c_via_image(const LatticeRef& l, const Ideal& ideal);
/// c as a homomorphism between ideal lattices.
LatticeHom comonad_c_hom(const LatticeRef& l);

/// Counit of the ideal comonad: I -> join(I).
std::size_t comonad_counit(const LatticeRef& l, const Ideal& ideal);

/// A candidate coalgebra structure a -> structure[a] (an ideal of home).
struct CoalgebraCandidate {
  LatticeRef home;
  std::vector<Mask> structure;
};

/// a -> {x | x << a}.
CoalgebraCandidate coalgebra_gamma(const LatticeRef& l);

/// Candidate is a lattice homomorphism into the ideal lattice satisfying
/// counit . gamma = id and c . gamma = J(gamma) . gamma.
Verdict check_coalgebra(const LatticeRef& l, const CoalgebraCandidate& candidate);

/// J(h) . gamma_source = gamma_target . h.
bool is_proper_frame_hom(const LatticeHom& h);

}  // namespace stonekit

#endif
