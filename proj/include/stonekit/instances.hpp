#ifndef STONEKIT_INSTANCES_HPP
#define STONEKIT_INSTANCES_HPP

// Concrete categories, functors, monads and adjunctions for the law checker.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "stonekit/category.hpp"
#include "stonekit/frame.hpp"
#include "stonekit/lattice.hpp"
#include "stonekit/space.hpp"
#include "stonekit/topology.hpp"

namespace stonekit::cat {

/// Finite spaces and continuous maps.
struct Top {
  using Object = SpaceRef;
  using Morphism = ContinuousMap;
  static std::string name() { return "Top"; }
  static Morphism identity(const Object& x) { return ContinuousMap::identity(x); }
  static Morphism compose(const Morphism& g, const Morphism& f) { return stonekit::compose(g, f); }
  static Object source(const Morphism& f) { return f.source(); }
  static Object target(const Morphism& f) { return f.target(); }
  static bool same(const Object& a, const Object& b) { return same_space(a, b); }
  static bool equal(const Morphism& f, const Morphism& g) { return f == g; }
  static std::optional<Morphism> inverse(const Morphism& f) { return stonekit::inverse(f); }
  static std::string describe(const Object& x);
};

/// Finite distributive lattices (equivalently finite frames) and homomorphisms.
struct Lat {
  using Object = LatticeRef;
  using Morphism = LatticeHom;
  static std::string name() { return "Frm"; }
  static Morphism identity(const Object& x) { return LatticeHom::identity(x); }
  static Morphism compose(const Morphism& g, const Morphism& f) { return stonekit::compose(g, f); }
  static Object source(const Morphism& f) { return f.source(); }
  static Object target(const Morphism& f) { return f.target(); }
  static bool same(const Object& a, const Object& b) { return same_lattice(a, b); }
  static bool equal(const Morphism& f, const Morphism& g) { return f == g; }
  static std::optional<Morphism> inverse(const Morphism& f) { return stonekit::inverse(f); }
  static std::string describe(const Object& x);
};

/// Finite locales: frames with arrows reversed.
using Loc = Op<Lat>;

/// Subsets of a finite set ordered by inclusion, as a thin category.
struct Subsets {
  using Object = Mask;
  struct Morphism {
    Mask from = 0;
    Mask to = 0;
  };
  static std::string name() { return "Sub"; }
  /// Throws TypeMismatch unless from is contained in to.
  static Morphism arrow(Mask from, Mask to);
  static Morphism identity(Object x) { return {x, x}; }
  static Morphism compose(const Morphism& g, const Morphism& f);
  static Object source(const Morphism& f) { return f.from; }
  static Object target(const Morphism& f) { return f.to; }
  static bool same(Object a, Object b) { return a == b; }
  static bool equal(const Morphism& f, const Morphism& g) { return f.from == g.from && f.to == g.to; }
  static std::optional<Morphism> inverse(const Morphism& f) {
    if (f.from == f.to) return f;
    return std::nullopt;
  }
  static std::string describe(Object x);
};

template <Category C>
MonadInstance<Op<C>> opposite_monad(const ComonadInstance<C>& w) {
  using D = Op<C>;
  FunctorInstance<D, D> endo{w.endo.name, w.endo.on_object,
                             [f = w.endo](const typename D::Morphism& m) { return typename D::Morphism{f.map(m.arrow)}; }};
  NatTransInstance<D, D> unit{w.counit.name + "^op", identity_functor<D>(), endo,
                              [e = w.counit](const typename D::Object& x) { return typename D::Morphism{e(x)}; }};
  NatTransInstance<D, D> mult{w.comult.name + "^op", compose(endo, endo), endo,
                              [d = w.comult](const typename D::Object& x) { return typename D::Morphism{d(x)}; }};
  return {w.name + "^op", endo, unit, mult};
}

template <Category C>
MonadInstance<C> identity_monad() {
  auto id = identity_functor<C>();
  auto unit = [](const typename C::Object& x) { return C::identity(x); };
  return {"Id", id, {"id", id, id, unit}, {"id", id, id, unit}};
}

// Functors.
FunctorInstance<Top, Loc> open_functor();       // X -> O(X), f -> preimage
FunctorInstance<Loc, Top> spectrum_functor();   // L -> Sigma(L)
FunctorInstance<Top, Top> hausdorff_functor();  // X -> R(X)
FunctorInstance<Lat, Lat> ideal_functor();      // L -> J(L)
FunctorInstance<Lat, Lat> center_functor();     // L -> CReg(L)

// Monads and comonads.
MonadInstance<Lat> ideal_monad();            // (J, union, down)
ComonadInstance<Lat> ideal_comonad();        // (J, c, join)
MonadInstance<Loc> ideal_locale_monad();     // opposite of ideal_comonad
MonadInstance<Top> filter_monad();           // (F, mu, eta)
ComonadInstance<Lat> center_comonad();       // CReg with its inclusion
MonadInstance<Loc> center_locale_monad();    // opposite of center_comonad
ComonadInstance<Lat> center_ideal_comonad(); // CReg.J
MonadInstance<Loc> center_ideal_locale_monad();

// Adjunctions.
AdjunctionInstance<Top, Loc> open_spectrum_adjunction();
/// Ideal completion left adjoint to the forgetful functor, both on finite
/// lattices: unit down, counit join.
AdjunctionInstance<Lat, Lat> free_frame_adjunction();
/// Direct image left adjoint to preimage along f.
AdjunctionInstance<Subsets, Subsets> image_preimage_adjunction(const ContinuousMap& f);
/// Kuratowski closure of a space as a monad on its subsets.
MonadInstance<Subsets> closure_monad(const SpaceRef& x);

/// Pairing FX -> Sigma J O X as a transformation from F to the lifted ideal monad.
NatTransInstance<Top, Top> pairing_transformation();

/// Subsets of the source of f and the lifted closure preimage.closure.image.
struct ClosureInitiality {
  bool c_initial = false;
  Verdict closure_operator;  // the lifted operator is monotone, inflationary, idempotent
  std::string witness;       // first subset where the two closures differ
};
ClosureInitiality closure_initiality_report(const ContinuousMap& f);
/// c_X = f^-1 . c_Y . f on every subset of the source.
bool closure_initiality(const ContinuousMap& f);

// Fault fixtures.

/// The filter monad with its multiplication followed by a nontrivial
/// self-homeomorphism of FX wherever one exists.
MonadInstance<Top> swapped_filter_monad();
/// The open/spectrum adjunction with each counit precomposed with a
/// nontrivial automorphism of the frame when there is one.
AdjunctionInstance<Top, Loc> twisted_counit_adjunction();
/// Twisted at the single frame `at` and genuine elsewhere, so the counit is
/// not natural at `at`.
AdjunctionInstance<Top, Loc> skewed_counit_adjunction(const LatticeRef& at);
/// The open/spectrum adjunction with a non-invertible counit at every frame
/// that admits a non-bijective homomorphism into its spatial reflection.
AdjunctionInstance<Top, Loc> collapsed_counit_adjunction();

/// The canonical algebra of the ideal locale monad on L: the locale map
/// given by the principal-ideal embedding.
AlgebraInstance<Loc> ideal_locale_algebra(const LatticeRef& l);
/// A homomorphism L -> J(L) other than the principal-ideal embedding, as a
/// structure map; nullopt when there is none.
std::optional<AlgebraInstance<Loc>> bogus_ideal_locale_algebra(const LatticeRef& l);

}  // namespace stonekit::cat

#endif
