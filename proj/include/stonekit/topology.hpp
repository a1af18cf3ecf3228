#ifndef STONEKIT_TOPOLOGY_HPP
#define STONEKIT_TOPOLOGY_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stonekit/frame.hpp"
#include "stonekit/lattice.hpp"
#include "stonekit/space.hpp"
#include "stonekit/verdict.hpp"

namespace stonekit {

/// Specialization preorder: x <= y iff every open containing x contains y.
/// Opens are therefore up-sets.
struct Preorder {
  std::vector<std::string> names;
  std::vector<Mask> up;

  bool leq(std::size_t x, std::size_t y) const { return contains(up[x], y); }
  bool antisymmetric() const;
};

Preorder specialization_order(const FinSpace& x);
bool is_t0(const FinSpace& x);
/// The specialization order as a poset; throws CycleError unless x is T0.
FinPoset specialization_poset(const FinSpace& x);

/// A quotient space with its projection.
struct Quotient {
  SpaceRef space;
  ContinuousMap projection;
};

/// Identifies topologically indistinguishable points.
Quotient t0_quotient(const SpaceRef& x);

/// Every continuous map from the quotiented space into one of the targets
/// factors through the projection exactly once.
Verdict check_quotient_universality(const Quotient& q, const std::vector<SpaceRef>& targets);

/// Prime filter of the open-set lattice of `home`; members index the
/// elements of open_set_frame(*home).
struct OpenPrimeFilter {
  SpaceRef home;
  Mask members = 0;

  friend bool operator==(const OpenPrimeFilter& a, const OpenPrimeFilter& b) {
    return a.members == b.members && same_space(a.home, b.home);
  }
};

/// The space FX of open prime filters, topologised by the sets
/// O* = {F | O in F}.
struct FilterSpace {
  SpaceRef base;
  SetLattice opens;           // open_set_frame(*base)
  SpaceRef space;             // FX
  std::vector<Mask> filters;  // filters[p] is the filter at point p of FX

  std::size_t point_of(Mask filter) const;
  /// O* for the open with lattice index `open`, as a set of points of FX.
  Mask star(std::size_t open) const;
};

FilterSpace filter_space(const SpaceRef& x);

/// {V open in the target | f^-1(V) in F}. Throws ForeignFilter unless F
/// lives over f's source.
OpenPrimeFilter filter_map_image(const ContinuousMap& f, const OpenPrimeFilter& filter);
/// F on morphisms: FX -> FY.
ContinuousMap filter_map(const ContinuousMap& f);

/// Open neighbourhood filter of a point.
OpenPrimeFilter monad_eta(const SpaceRef& x, std::size_t point);
ContinuousMap eta_map(const SpaceRef& x);

/// {O open | O* in the filter}, for an open prime filter of FX.
OpenPrimeFilter monad_mu(const SpaceRef& x, const OpenPrimeFilter& filter);
ContinuousMap mu_map(const SpaceRef& x);

/// The structure map FX -> X, when there is one.
struct FAlgebra {
  std::optional<ContinuousMap> structure;
  /// Two distinct points with the same neighbourhood filter, when not T0.
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

/// The inverse of the unit when x is T0; otherwise no algebra, with a witness.
FAlgebra canonical_f_algebra(const SpaceRef& x);

/// alpha . eta = id and alpha . F(alpha) = alpha . mu.
Verdict check_f_algebra(const SpaceRef& x, const ContinuousMap& alpha);

/// alpha_Y . Ff = f . alpha_X for the canonical algebras. Throws
/// NoCanonicalAlgebra when an endpoint is not T0.
bool is_proper_map(const ContinuousMap& f);

/// Spectrum of the open-set lattice with the unit x -> (neighbourhood filter of x).
struct Sobrification {
  Spectrum spectrum;
  ContinuousMap unit;
  bool sober = false;  // the unit is a homeomorphism
};
Sobrification sobrification(const SpaceRef& x);

/// FX -> spectrum of the ideal lattice of the opens of X, sending F to the
/// homomorphism I -> [I meets F].
struct Pairing {
  FilterSpace filters;
  Spectrum spectrum;
  ContinuousMap map;
  bool homeomorphism = false;
};
Pairing pairing_iso(const SpaceRef& x);

/// Quotient by the partition generated by clopen sets, with the discrete
/// topology.
Quotient hausdorff_reflection(const SpaceRef& x);

/// Both sides of the compactification square for FX, and the comparison
/// from the Hausdorff side to the spectrum of the Boolean center.
struct CechStone {
  SpaceRef pointfree_side;  // spectrum of the Boolean center of O(FX)
  SpaceRef pointset_side;   // Hausdorff reflection of FX
  std::optional<ContinuousMap> comparison;
  bool iso = false;
  std::string witness;
};
CechStone cech_stone_square(const SpaceRef& x);

/// Space of ultrafilters on the points of x, topologised by A^ = {u | A in u}
/// for A open.
struct UltrafilterSpace {
  SpaceRef space;
  SetLattice powerset;
  std::vector<Mask> ultrafilters;  // over powerset elements
};
UltrafilterSpace ultrafilter_space(const SpaceRef& x);

/// UX is homeomorphic to X, and FX to the sobrification of the T0 quotient of UX.
Verdict ultrafilter_comparison(const SpaceRef& x);

}  // namespace stonekit

#endif
