#include "stonekit/instances.hpp"

#include <bit>

#include "stonekit/error.hpp"
#include "stonekit/order.hpp"

namespace stonekit::cat {

namespace {

std::string join_names(const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += ',';
    out += names[i];
  }
  return out;
}

/// Index in the center of the element x of the ambient lattice, if complemented.
std::optional<std::size_t> center_index(const Coreflection& c, std::size_t x) {
  const auto& a = c.inclusion.assignment();
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] == x) return k;
  return std::nullopt;
}

std::size_t require_center_index(const Coreflection& c, std::size_t x) {
  if (auto k = center_index(c, x)) return *k;
  throw NotAHomomorphism("image of a complemented element is not complemented");
}

/// B(h) : B(M) -> B(L) for h : M -> L.
LatticeHom center_map(const LatticeHom& h) {
  const Coreflection from = creg_coreflection(h.source());
  const Coreflection to = creg_coreflection(h.target());
  std::vector<std::size_t> a(from.center->size());
  for (std::size_t k = 0; k < a.size(); ++k) a[k] = require_center_index(to, h(from.inclusion(k)));
  return LatticeHom(from.center, to.center, std::move(a));
}

/// B(L) -> B(B(L)), the inverse of the inclusion of B(B(L)) into B(L).
LatticeHom center_comult(const LatticeRef& l) {
  const Coreflection inner = creg_coreflection(l);
  const Coreflection outer = creg_coreflection(inner.center);
  std::vector<std::size_t> a(inner.center->size());
  for (std::size_t k = 0; k < a.size(); ++k) a[k] = require_center_index(outer, k);
  return LatticeHom(inner.center, outer.center, std::move(a));
}

std::optional<ContinuousMap> nontrivial_automorphism(const SpaceRef& x) {
  for (const ContinuousMap& f : enumerate_continuous_maps(x, x))
    if (f != ContinuousMap::identity(x) && inverse(f)) return f;
  return std::nullopt;
}

std::optional<LatticeHom> nontrivial_automorphism(const LatticeRef& l) {
  for (auto& a : enumerate_homs(*l, *l)) {
    LatticeHom h(l, l, std::move(a));
    if (h != LatticeHom::identity(l) && h.injective()) return h;
  }
  return std::nullopt;
}

}  // namespace

std::string Top::describe(const Object& x) {
  std::string out = "space[" + join_names(x->names()) + ":";
  for (std::size_t i = 0; i < x->opens().size(); ++i) {
    if (i) out += ',';
    out += subset_name(x->names(), x->opens()[i]);
  }
  return out + "]";
}

std::string Lat::describe(const Object& x) { return "lattice[" + join_names(x->order().names()) + "]"; }

Subsets::Morphism Subsets::arrow(Mask from, Mask to) {
  if (!is_subset(from, to)) throw TypeMismatch("subset inclusion does not hold");
  return {from, to};
}

Subsets::Morphism Subsets::compose(const Morphism& g, const Morphism& f) {
  if (f.to != g.from) throw TypeMismatch("inclusions are not composable");
  return {f.from, g.to};
}

std::string Subsets::describe(Object x) { return "subset#" + std::to_string(x); }

// ---------------------------------------------------------------------------

FunctorInstance<Top, Loc> open_functor() {
  return {"O", [](const SpaceRef& x) { return open_set_frame(*x).lattice; },
          [](const ContinuousMap& f) { return Loc::Morphism{preimage_hom(f)}; }};
}

FunctorInstance<Loc, Top> spectrum_functor() {
  return {"S", [](const LatticeRef& l) { return spectrum(l).space; },
          [](const Loc::Morphism& m) {
            const LatticeHom& h = m.arrow;  // frame map target -> source of the locale map
            const Spectrum from = spectrum(h.target());
            const Spectrum to = spectrum(h.source());
            std::vector<std::size_t> a(from.filters.size());
            for (std::size_t p = 0; p < a.size(); ++p) {
              Mask pulled = 0;
              for (std::size_t b = 0; b < h.source()->size(); ++b)
                if (contains(from.filters[p], h(b))) pulled |= bit(b);
              a[p] = to.point_of(pulled);
            }
            return ContinuousMap(from.space, to.space, std::move(a));
          }};
}

FunctorInstance<Top, Top> hausdorff_functor() {
  return {"R", [](const SpaceRef& x) { return hausdorff_reflection(x).space; },
          [](const ContinuousMap& f) {
            const Quotient from = hausdorff_reflection(f.source());
            const Quotient to = hausdorff_reflection(f.target());
            std::vector<std::size_t> a(from.space->size());
            for (std::size_t q = 0; q < a.size(); ++q) {
              const Mask block = from.projection.preimage(bit(q));
              a[q] = to.projection(f(static_cast<std::size_t>(std::countr_zero(block))));
            }
            return ContinuousMap(from.space, to.space, std::move(a));
          }};
}

FunctorInstance<Lat, Lat> ideal_functor() {
  return {"J", [](const LatticeRef& l) { return ideal_lattice(l).lattice; },
          [](const LatticeHom& f) { return ideal_map(f); }};
}

FunctorInstance<Lat, Lat> center_functor() {
  return {"B", [](const LatticeRef& l) { return creg_coreflection(l).center; },
          [](const LatticeHom& h) { return center_map(h); }};
}

MonadInstance<Lat> ideal_monad() {
  const auto J = ideal_functor();
  const auto id = identity_functor<Lat>();
  return {"I", J, {"down", id, J, [](const LatticeRef& l) { return down_hom(l); }},
          {"union", compose(J, J), J, [](const LatticeRef& l) { return union_hom(l); }}};
}

ComonadInstance<Lat> ideal_comonad() {
  const auto J = ideal_functor();
  const auto id = identity_functor<Lat>();
  return {"K", J, {"join", J, id, [](const LatticeRef& l) { return frame_join_algebra(l); }},
          {"c", J, compose(J, J), [](const LatticeRef& l) { return comonad_c_hom(l); }}};
}

MonadInstance<Loc> ideal_locale_monad() { return opposite_monad(ideal_comonad()); }

MonadInstance<Top> filter_monad() {
  FunctorInstance<Top, Top> F{"F", [](const SpaceRef& x) { return filter_space(x).space; },
                              [](const ContinuousMap& f) { return filter_map(f); }};
  const auto id = identity_functor<Top>();
  return {"F", F, {"eta", id, F, [](const SpaceRef& x) { return eta_map(x); }},
          {"mu", compose(F, F), F, [](const SpaceRef& x) { return mu_map(x); }}};
}

ComonadInstance<Lat> center_comonad() {
  const auto B = center_functor();
  const auto id = identity_functor<Lat>();
  return {"CReg", B, {"incl", B, id, [](const LatticeRef& l) { return creg_coreflection(l).inclusion; }},
          {"delta", B, compose(B, B), [](const LatticeRef& l) { return center_comult(l); }}};
}

MonadInstance<Loc> center_locale_monad() { return opposite_monad(center_comonad()); }

ComonadInstance<Lat> center_ideal_comonad() {
  const auto G = compose(center_functor(), ideal_functor());
  const auto id = identity_functor<Lat>();
  NatTransInstance<Lat, Lat> counit{"join.incl", G, id, [](const LatticeRef& l) {
                                      const LatticeRef jl = ideal_lattice(l).lattice;
                                      return stonekit::compose(frame_join_algebra(l),
                                                               creg_coreflection(jl).inclusion);
                                    }};
  NatTransInstance<Lat, Lat> comult{"down", G, compose(G, G), [](const LatticeRef& l) {
                                      const Coreflection inner = creg_coreflection(ideal_lattice(l).lattice);
                                      const LatticeRef gl = inner.center;
                                      const LatticeHom down = down_hom(gl);
                                      const Coreflection outer = creg_coreflection(down.target());
                                      std::vector<std::size_t> a(gl->size());
                                      for (std::size_t x = 0; x < a.size(); ++x)
                                        a[x] = require_center_index(outer, down(x));
                                      return LatticeHom(gl, outer.center, std::move(a));
                                    }};
  return {"CReg.J", G, counit, comult};
}

MonadInstance<Loc> center_ideal_locale_monad() { return opposite_monad(center_ideal_comonad()); }

AdjunctionInstance<Top, Loc> open_spectrum_adjunction() {
  const auto O = open_functor();
  const auto S = spectrum_functor();
  NatTransInstance<Top, Top> unit{"eta", identity_functor<Top>(), compose(S, O),
                                  [](const SpaceRef& x) { return sobrification(x).unit; }};
  NatTransInstance<Loc, Loc> counit{"eps", compose(O, S), identity_functor<Loc>(),
                                    [](const LatticeRef& l) { return Loc::Morphism{spatiality_iso(l).hom}; }};
  return {"O-|S", O, S, unit, counit};
}

AdjunctionInstance<Lat, Lat> free_frame_adjunction() {
  const auto J = ideal_functor();
  const auto U = identity_functor<Lat>();
  NatTransInstance<Lat, Lat> unit{"down", identity_functor<Lat>(), J, [](const LatticeRef& l) { return down_hom(l); }};
  NatTransInstance<Lat, Lat> counit{"join", J, identity_functor<Lat>(),
                                    [](const LatticeRef& l) { return frame_join_algebra(l); }};
  return {"J-|U", J, U, unit, counit};
}

AdjunctionInstance<Subsets, Subsets> image_preimage_adjunction(const ContinuousMap& f) {
  FunctorInstance<Subsets, Subsets> image{"f!", [f](Mask a) { return f.image(a); },
                                          [f](const Subsets::Morphism& m) {
                                            return Subsets::arrow(f.image(m.from), f.image(m.to));
                                          }};
  FunctorInstance<Subsets, Subsets> preimage{"f*", [f](Mask b) { return f.preimage(b); },
                                             [f](const Subsets::Morphism& m) {
                                               return Subsets::arrow(f.preimage(m.from), f.preimage(m.to));
                                             }};
  const auto id = identity_functor<Subsets>();
  NatTransInstance<Subsets, Subsets> unit{"eta", id, compose(preimage, image),
                                          [f](Mask a) { return Subsets::arrow(a, f.preimage(f.image(a))); }};
  NatTransInstance<Subsets, Subsets> counit{"eps", compose(image, preimage), id,
                                            [f](Mask b) { return Subsets::arrow(f.image(f.preimage(b)), b); }};
  return {"f!-|f*", image, preimage, unit, counit};
}

MonadInstance<Subsets> closure_monad(const SpaceRef& x) {
  FunctorInstance<Subsets, Subsets> c{"c", [x](Mask a) { return x->closure(a); },
                                      [x](const Subsets::Morphism& m) {
                                        return Subsets::arrow(x->closure(m.from), x->closure(m.to));
                                      }};
  const auto id = identity_functor<Subsets>();
  return {"c", c, {"incl", id, c, [x](Mask a) { return Subsets::arrow(a, x->closure(a)); }},
          {"flat", compose(c, c), c, [x](Mask a) { return Subsets::arrow(x->closure(x->closure(a)), x->closure(a)); }}};
}

NatTransInstance<Top, Top> pairing_transformation() {
  const auto lifted = lift_monad(open_spectrum_adjunction(), ideal_locale_monad());
  return {"pair", filter_monad().endo, lifted.endo, [](const SpaceRef& x) { return pairing_iso(x).map; }};
}

ClosureInitiality closure_initiality_report(const ContinuousMap& f) {
  const SpaceRef& x = f.source();
  if (x->size() > 16) throw BudgetExceeded("closure comparison is limited to 16 source points");
  const auto lifted = lift_monad(image_preimage_adjunction(f), closure_monad(f.target()));
  const auto& op = lifted.endo;
  ClosureInitiality out;
  out.c_initial = true;
  const Mask everything = x->all();
  for (Mask a = 0;; a = (a - everything) & everything) {
    const Mask lifted_a = op(a);
    if (out.closure_operator.pass) {
      if (!is_subset(a, lifted_a))
        out.closure_operator = Verdict::fail("not inflationary at " + subset_name(x->names(), a));
      else if (op(lifted_a) != lifted_a)
        out.closure_operator = Verdict::fail("not idempotent at " + subset_name(x->names(), a));
      else
        for_each_submask(a, [&](Mask b) {
          if (out.closure_operator.pass && !is_subset(op(b), lifted_a))
            out.closure_operator = Verdict::fail("not monotone at " + subset_name(x->names(), b) + " within " +
                                                 subset_name(x->names(), a));
        });
    }
    if (out.c_initial && lifted_a != x->closure(a)) {
      out.c_initial = false;
      out.witness = "closure of " + subset_name(x->names(), a) + " is " + subset_name(x->names(), x->closure(a)) +
                    " but the lifted closure gives " + subset_name(x->names(), lifted_a);
    }
    if (a == everything) break;
  }
  return out;
}

bool closure_initiality(const ContinuousMap& f) { return closure_initiality_report(f).c_initial; }

// ---------------------------------------------------------------------------

MonadInstance<Top> swapped_filter_monad() {
  MonadInstance<Top> t = filter_monad();
  t.name = "F-swapped";
  t.mult.name = "mu-swapped";
  t.mult.component = [](const SpaceRef& x) {
    const ContinuousMap mu = mu_map(x);
    if (auto swap = nontrivial_automorphism(mu.target())) return stonekit::compose(*swap, mu);
    return mu;
  };
  return t;
}

AdjunctionInstance<Top, Loc> twisted_counit_adjunction() {
  AdjunctionInstance<Top, Loc> a = open_spectrum_adjunction();
  a.name = "O-|S twisted";
  a.counit.component = [](const LatticeRef& l) {
    const LatticeHom eps = spatiality_iso(l).hom;
    if (auto aut = nontrivial_automorphism(l)) return Loc::Morphism{stonekit::compose(eps, *aut)};
    return Loc::Morphism{eps};
  };
  return a;
}

AdjunctionInstance<Top, Loc> skewed_counit_adjunction(const LatticeRef& at) {
  AdjunctionInstance<Top, Loc> a = twisted_counit_adjunction();
  a.name = "O-|S skewed";
  const auto twisted = a.counit.component;
  a.counit.component = [twisted, at](const LatticeRef& l) {
    if (same_lattice(l, at)) return twisted(l);
    return Loc::Morphism{spatiality_iso(l).hom};
  };
  return a;
}

AdjunctionInstance<Top, Loc> collapsed_counit_adjunction() {
  AdjunctionInstance<Top, Loc> a = open_spectrum_adjunction();
  a.name = "O-|S collapsed";
  a.counit.component = [](const LatticeRef& l) {
    const LatticeHom eps = spatiality_iso(l).hom;
    for (auto& assignment : enumerate_homs(*l, *eps.target())) {
      LatticeHom h(l, eps.target(), std::move(assignment));
      if (!h.injective()) return Loc::Morphism{h};
    }
    return Loc::Morphism{eps};
  };
  return a;
}

AlgebraInstance<Loc> ideal_locale_algebra(const LatticeRef& l) { return {l, Loc::Morphism{down_hom(l)}}; }

std::optional<AlgebraInstance<Loc>> bogus_ideal_locale_algebra(const LatticeRef& l) {
  const LatticeHom down = down_hom(l);
  for (auto& assignment : enumerate_homs(*l, *down.target())) {
    LatticeHom h(l, down.target(), std::move(assignment));
    if (h != down) return AlgebraInstance<Loc>{l, Loc::Morphism{h}};
  }
  return std::nullopt;
}

}  // namespace stonekit::cat
