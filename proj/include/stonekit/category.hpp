#ifndef STONEKIT_CATEGORY_HPP
#define STONEKIT_CATEGORY_HPP

// Law checking over finite universes of test objects and morphisms.
//
// A category is a traits type with static operations; nothing is reified
// beyond the objects and morphisms handed to the checkers. Every equation is
// checked objectwise as exact equality of morphisms.

#include <concepts>
#include <cstddef>
#include <exception>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stonekit/error.hpp"
#include "stonekit/verdict.hpp"

namespace stonekit::cat {

template <class C>
concept Category = requires(const typename C::Object& x, const typename C::Morphism& f) {
  { C::name() } -> std::convertible_to<std::string>;
  { C::identity(x) } -> std::same_as<typename C::Morphism>;
  { C::compose(f, f) } -> std::same_as<typename C::Morphism>;
  { C::source(f) } -> std::same_as<typename C::Object>;
  { C::target(f) } -> std::same_as<typename C::Object>;
  { C::same(x, x) } -> std::same_as<bool>;
  { C::equal(f, f) } -> std::same_as<bool>;
  { C::inverse(f) } -> std::same_as<std::optional<typename C::Morphism>>;
  { C::describe(x) } -> std::convertible_to<std::string>;
};

/// Opposite category: the same objects with every arrow reversed.
template <Category C>
struct Op {
  using Object = typename C::Object;
  struct Morphism {
    typename C::Morphism arrow;  // the underlying arrow, pointing the other way
  };

  static std::string name() { return C::name() + "^op"; }
  static Morphism identity(const Object& x) { return {C::identity(x)}; }
  static Morphism compose(const Morphism& g, const Morphism& f) { return {C::compose(f.arrow, g.arrow)}; }
  static Object source(const Morphism& f) { return C::target(f.arrow); }
  static Object target(const Morphism& f) { return C::source(f.arrow); }
  static bool same(const Object& a, const Object& b) { return C::same(a, b); }
  static bool equal(const Morphism& f, const Morphism& g) { return C::equal(f.arrow, g.arrow); }
  static std::optional<Morphism> inverse(const Morphism& f) {
    if (auto g = C::inverse(f.arrow)) return Morphism{*g};
    return std::nullopt;
  }
  static std::string describe(const Object& x) { return C::describe(x); }
};

template <Category C>
struct Universe {
  std::vector<typename C::Object> objects;
  std::vector<typename C::Morphism> morphisms;
};

template <Category C, Category D>
struct FunctorInstance {
  std::string name;
  std::function<typename D::Object(const typename C::Object&)> on_object;
  std::function<typename D::Morphism(const typename C::Morphism&)> on_morphism;

  typename D::Object operator()(const typename C::Object& x) const { return on_object(x); }
  typename D::Morphism map(const typename C::Morphism& f) const { return on_morphism(f); }
};

template <Category C>
FunctorInstance<C, C> identity_functor() {
  return {"Id", [](const typename C::Object& x) { return x; }, [](const typename C::Morphism& f) { return f; }};
}

/// g after f.
template <Category A, Category B, Category C>
FunctorInstance<A, C> compose(const FunctorInstance<B, C>& g, const FunctorInstance<A, B>& f) {
  return {g.name + f.name, [g, f](const typename A::Object& x) { return g(f(x)); },
          [g, f](const typename A::Morphism& m) { return g.map(f.map(m)); }};
}

template <Category C, Category D>
struct NatTransInstance {
  std::string name;
  FunctorInstance<C, D> source;
  FunctorInstance<C, D> target;
  std::function<typename D::Morphism(const typename C::Object&)> component;

  typename D::Morphism operator()(const typename C::Object& x) const { return component(x); }
};

/// Whiskering G alpha: components G(alpha_X).
template <Category A, Category B, Category C>
NatTransInstance<A, C> whisker_left(const FunctorInstance<B, C>& g, const NatTransInstance<A, B>& alpha) {
  return {g.name + alpha.name, compose(g, alpha.source), compose(g, alpha.target),
          [g, alpha](const typename A::Object& x) { return g.map(alpha(x)); }};
}

/// Whiskering alpha F: components alpha_{FX}.
template <Category A, Category B, Category C>
NatTransInstance<A, C> whisker_right(const NatTransInstance<B, C>& alpha, const FunctorInstance<A, B>& f) {
  return {alpha.name + f.name, compose(alpha.source, f), compose(alpha.target, f),
          [alpha, f](const typename A::Object& x) { return alpha(f(x)); }};
}

template <Category C>
struct MonadInstance {
  std::string name;
  FunctorInstance<C, C> endo;
  NatTransInstance<C, C> unit;  // Id -> T
  NatTransInstance<C, C> mult;  // TT -> T
};

template <Category C>
struct ComonadInstance {
  std::string name;
  FunctorInstance<C, C> endo;
  NatTransInstance<C, C> counit;  // W -> Id
  NatTransInstance<C, C> comult;  // W -> WW
};

/// L -| R with L : B -> C.
template <Category B, Category C>
struct AdjunctionInstance {
  std::string name;
  FunctorInstance<B, C> left;
  FunctorInstance<C, B> right;
  NatTransInstance<B, B> unit;    // Id -> RL
  NatTransInstance<C, C> counit;  // LR -> Id
};

template <Category C>
struct AlgebraInstance {
  typename C::Object carrier;
  typename C::Morphism structure;  // T carrier -> carrier
};

struct LawResult {
  std::string object;
  std::string law;
  bool pass = true;
  std::string witness;
};

struct Report {
  std::vector<LawResult> results;

  bool passed() const {
    for (const auto& r : results)
      if (!r.pass) return false;
    return true;
  }
  std::size_t failures() const {
    std::size_t n = 0;
    for (const auto& r : results) n += r.pass ? 0 : 1;
    return n;
  }
  const LawResult* first_failure() const {
    for (const auto& r : results)
      if (!r.pass) return &r;
    return nullptr;
  }
  void add(std::string object, std::string law, const Verdict& v) {
    results.push_back({std::move(object), std::move(law), v.pass, v.witness});
  }
  void merge(const Report& other) { results.insert(results.end(), other.results.begin(), other.results.end()); }
  Verdict verdict() const {
    if (const LawResult* r = first_failure()) return Verdict::fail(r->object + " " + r->law + ": " + r->witness);
    return Verdict::ok();
  }
};

namespace detail {

/// Evaluates both sides of an equation; construction errors count as failure.
template <Category C, class Lhs, class Rhs>
Verdict equation(const std::string& lhs_name, const std::string& rhs_name, Lhs lhs, Rhs rhs) {
  try {
    if (C::equal(lhs(), rhs())) return Verdict::ok();
    return Verdict::fail(lhs_name + " != " + rhs_name);
  } catch (const std::exception& e) {
    return Verdict::fail(lhs_name + " = " + rhs_name + " is ill-typed: " + e.what());
  }
}

template <Category C>
bool is_iso(const typename C::Morphism& f) {
  return C::inverse(f).has_value();
}

}  // namespace detail

template <Category C, Category D>
Report check_functor_laws(const FunctorInstance<C, D>& f, const Universe<C>& u) {
  Report report;
  for (const auto& x : u.objects)
    report.add(C::describe(x), f.name + ".identity",
               detail::equation<D>(
                   f.name + "(id)", "id", [&] { return f.map(C::identity(x)); }, [&] { return D::identity(f(x)); }));
  for (const auto& g : u.morphisms)
    for (const auto& h : u.morphisms) {
      if (!C::same(C::target(h), C::source(g))) continue;
      report.add(C::describe(C::source(h)) + "->" + C::describe(C::target(g)), f.name + ".composition",
                 detail::equation<D>(
                     f.name + "(g.h)", f.name + "g." + f.name + "h", [&] { return f.map(C::compose(g, h)); },
                     [&] { return D::compose(f.map(g), f.map(h)); }));
    }
  return report;
}

template <Category C, Category D>
Report check_naturality(const NatTransInstance<C, D>& alpha, const Universe<C>& u) {
  Report report;
  for (const auto& m : u.morphisms) {
    const auto x = C::source(m);
    const auto y = C::target(m);
    report.add(C::describe(x) + "->" + C::describe(y), alpha.name + ".naturality",
               detail::equation<D>(
                   alpha.name + "_Y.Ff", "Gf." + alpha.name + "_X",
                   [&] { return D::compose(alpha(y), alpha.source.map(m)); },
                   [&] { return D::compose(alpha.target.map(m), alpha(x)); }));
  }
  return report;
}

template <Category C>
Report check_monad_laws(const MonadInstance<C>& t, const std::vector<typename C::Object>& objects) {
  Report report;
  const auto& T = t.endo;
  const auto& e = t.unit;
  const auto& m = t.mult;
  for (const auto& x : objects) {
    const std::string id = C::describe(x);
    report.add(id, t.name + ".associativity",
               detail::equation<C>(
                   "m.Tm", "m.mT", [&] { return C::compose(m(x), T.map(m(x))); },
                   [&] { return C::compose(m(x), m(T(x))); }));
    report.add(id, t.name + ".left-unit",
               detail::equation<C>(
                   "m.eT", "id", [&] { return C::compose(m(x), e(T(x))); }, [&] { return C::identity(T(x)); }));
    report.add(id, t.name + ".right-unit",
               detail::equation<C>(
                   "m.Te", "id", [&] { return C::compose(m(x), T.map(e(x))); }, [&] { return C::identity(T(x)); }));
  }
  return report;
}

template <Category C>
Report check_comonad_laws(const ComonadInstance<C>& w, const std::vector<typename C::Object>& objects) {
  Report report;
  const auto& W = w.endo;
  const auto& e = w.counit;
  const auto& d = w.comult;
  for (const auto& x : objects) {
    const std::string id = C::describe(x);
    report.add(id, w.name + ".coassociativity",
               detail::equation<C>(
                   "Wd.d", "dW.d", [&] { return C::compose(W.map(d(x)), d(x)); },
                   [&] { return C::compose(d(W(x)), d(x)); }));
    report.add(id, w.name + ".left-counit",
               detail::equation<C>(
                   "eW.d", "id", [&] { return C::compose(e(W(x)), d(x)); }, [&] { return C::identity(W(x)); }));
    report.add(id, w.name + ".right-counit",
               detail::equation<C>(
                   "We.d", "id", [&] { return C::compose(W.map(e(x)), d(x)); }, [&] { return C::identity(W(x)); }));
  }
  return report;
}

template <Category B, Category C>
Report check_adjunction(const AdjunctionInstance<B, C>& a, const std::vector<typename B::Object>& left_objects,
                        const std::vector<typename C::Object>& right_objects) {
  Report report;
  for (const auto& x : left_objects)
    report.add(B::describe(x), a.name + ".triangle-L",
               detail::equation<C>(
                   "eL.Lh", "id", [&] { return C::compose(a.counit(a.left(x)), a.left.map(a.unit(x))); },
                   [&] { return C::identity(a.left(x)); }));
  for (const auto& y : right_objects)
    report.add(C::describe(y), a.name + ".triangle-R",
               detail::equation<B>(
                   "Re.hR", "id", [&] { return B::compose(a.right.map(a.counit(y)), a.unit(a.right(y))); },
                   [&] { return B::identity(a.right(y)); }));
  return report;
}

/// The monad RTL with unit ReL.eta and multiplication RmL.RTeTL.
template <Category B, Category C>
MonadInstance<B> lift_monad(const AdjunctionInstance<B, C>& a, const MonadInstance<C>& t) {
  const auto L = a.left;
  const auto R = a.right;
  const auto T = t.endo;
  const auto eta = a.unit;
  const auto eps = a.counit;
  const auto e = t.unit;
  const auto m = t.mult;
  const std::string name = "L(" + t.name + ")";
  auto M = compose(R, compose(T, L));
  M.name = name;
  NatTransInstance<B, B> d{"d", identity_functor<B>(), M, [=](const typename B::Object& x) {
                             return B::compose(R.map(e(L(x))), eta(x));
                           }};
  NatTransInstance<B, B> n{"n", compose(M, M), M, [=](const typename B::Object& x) {
                             const auto tlx = T(L(x));
                             return B::compose(R.map(m(L(x))), R.map(T.map(eps(tlx))));
                           }};
  return {name, M, d, n};
}

/// lambda = RTe : RTLR -> RT, with the unit triangle and the multiplication
/// pentagon checked on each object of the codomain category.
template <Category B, Category C>
struct LiftedLaw {
  NatTransInstance<C, B> lambda;
  Report report;
};

template <Category B, Category C>
LiftedLaw<B, C> lift_law(const AdjunctionInstance<B, C>& a, const MonadInstance<C>& t,
                         const std::vector<typename C::Object>& objects) {
  const auto R = a.right;
  const auto T = t.endo;
  const auto eps = a.counit;
  const MonadInstance<B> lifted = lift_monad(a, t);
  NatTransInstance<C, B> lambda{"lambda", compose(lifted.endo, R), compose(R, T),
                                [=](const typename C::Object& y) { return R.map(T.map(eps(y))); }};
  LiftedLaw<B, C> out{lambda, {}};
  for (const auto& y : objects) {
    const std::string id = C::describe(y);
    out.report.add(id, "lambda[" + t.name + "].unit",
                   detail::equation<B>(
                       "lambda.dR", "Re", [&] { return B::compose(lambda(y), lifted.unit(R(y))); },
                       [&] { return R.map(t.unit(y)); }));
    out.report.add(id, "lambda[" + t.name + "].multiplication",
                   detail::equation<B>(
                       "lambda.nR", "Rm.lambdaT.Mlambda",
                       [&] { return B::compose(lambda(y), lifted.mult(R(y))); },
                       [&] {
                         return B::compose(R.map(t.mult(y)),
                                           B::compose(lambda(T(y)), lifted.endo.map(lambda(y))));
                       }));
  }
  return out;
}

template <Category C>
Verdict check_algebra(const MonadInstance<C>& t, const AlgebraInstance<C>& alg) {
  const auto& x = alg.carrier;
  const auto& a = alg.structure;
  Verdict v = detail::equation<C>(
      "a.e", "id", [&] { return C::compose(a, t.unit(x)); }, [&] { return C::identity(x); });
  if (!v) return v;
  return detail::equation<C>(
      "a.Ta", "a.m", [&] { return C::compose(a, t.endo.map(a)); }, [&] { return C::compose(a, t.mult(x)); });
}

/// h : (X, a) -> (Y, b) with h.a = b.Th.
template <Category C>
Verdict check_algebra_hom(const MonadInstance<C>& t, const typename C::Morphism& h, const AlgebraInstance<C>& from,
                          const AlgebraInstance<C>& to) {
  return detail::equation<C>(
      "h.a", "b.Th", [&] { return C::compose(h, from.structure); },
      [&] { return C::compose(to.structure, t.endo.map(h)); });
}

/// An algebra hom with an inverse in the underlying category.
template <Category C>
Verdict check_algebra_iso(const MonadInstance<C>& t, const typename C::Morphism& h, const AlgebraInstance<C>& from,
                          const AlgebraInstance<C>& to) {
  if (!detail::is_iso<C>(h)) return Verdict::fail("comparison map is not invertible");
  return check_algebra_hom(t, h, from, to);
}

/// K(X, alpha) = (RX, R(alpha).lambda_X).
template <Category B, Category C>
AlgebraInstance<B> comparison_algebra(const AdjunctionInstance<B, C>& a, const MonadInstance<C>& t,
                                      const AlgebraInstance<C>& alg) {
  if (Verdict v = check_algebra(t, alg); !v)
    throw NotAnAlgebra("input is not a " + t.name + "-algebra on " + C::describe(alg.carrier) + ": " + v.witness);
  const auto& R = a.right;
  return {R(alg.carrier), B::compose(R.map(alg.structure), R.map(t.endo.map(a.counit(alg.carrier))))};
}

/// epsilon_{TLY} is invertible for each listed Y.
template <Category B, Category C>
Verdict check_counit_iso(const AdjunctionInstance<B, C>& a, const MonadInstance<C>& t,
                         const std::vector<typename B::Object>& objects) {
  for (const auto& y : objects) {
    const auto tly = t.endo(a.left(y));
    if (!detail::is_iso<C>(a.counit(tly))) return Verdict::fail(B::describe(y));
  }
  return Verdict::ok();
}

/// K*(Y, beta) = (LY, L(beta).epsilon_{TLY}^-1).
template <Category B, Category C>
AlgebraInstance<C> inverse_comparison(const AdjunctionInstance<B, C>& a, const MonadInstance<C>& t,
                                      const AlgebraInstance<B>& alg) {
  const auto& L = a.left;
  const auto tly = t.endo(L(alg.carrier));
  const auto inv = C::inverse(a.counit(tly));
  if (!inv) throw CounitNotIso("counit is not invertible at T L " + B::describe(alg.carrier));
  return {L(alg.carrier), C::compose(L.map(alg.structure), *inv)};
}

/// K*K(X, alpha) is isomorphic to (X, alpha) through epsilon_X.
template <Category B, Category C>
Verdict check_round_trip_codomain(const AdjunctionInstance<B, C>& a, const MonadInstance<C>& t,
                                  const AlgebraInstance<C>& alg) {
  try {
    const AlgebraInstance<C> back = inverse_comparison(a, t, comparison_algebra(a, t, alg));
    return check_algebra_iso(t, a.counit(alg.carrier), back, alg);
  } catch (const Error& e) {
    return Verdict::fail(e.what());
  }
}

/// KK*(Y, beta) is isomorphic to (Y, beta) through eta_Y.
template <Category B, Category C>
Verdict check_round_trip_base(const AdjunctionInstance<B, C>& a, const MonadInstance<C>& t,
                              const AlgebraInstance<B>& alg) {
  try {
    const MonadInstance<B> lifted = lift_monad(a, t);
    if (Verdict v = check_algebra(lifted, alg); !v) return Verdict::fail("input: " + v.witness);
    const AlgebraInstance<B> back = comparison_algebra(a, t, inverse_comparison(a, t, alg));
    return check_algebra_iso(lifted, a.unit(alg.carrier), alg, back);
  } catch (const Error& e) {
    return Verdict::fail(e.what());
  }
}

/// alpha : T -> N with alpha.e = e' and alpha.m = m'.(alpha * alpha).
template <Category C>
Report check_monad_morphism(const NatTransInstance<C, C>& alpha, const MonadInstance<C>& t, const MonadInstance<C>& n,
                            const std::vector<typename C::Object>& objects) {
  Report report;
  for (const auto& x : objects) {
    const std::string id = C::describe(x);
    report.add(id, alpha.name + ".unit",
               detail::equation<C>(
                   "alpha.e", "e'", [&] { return C::compose(alpha(x), t.unit(x)); }, [&] { return n.unit(x); }));
    report.add(id, alpha.name + ".multiplication",
               detail::equation<C>(
                   "alpha.m", "m'.N(alpha).alphaT", [&] { return C::compose(alpha(x), t.mult(x)); },
                   [&] { return C::compose(n.mult(x), C::compose(n.endo.map(alpha(x)), alpha(t.endo(x)))); }));
  }
  return report;
}

/// R(alpha)L : RTL -> RNL.
template <Category B, Category C>
NatTransInstance<B, B> lift_of_morphism(const AdjunctionInstance<B, C>& a, const NatTransInstance<C, C>& alpha) {
  const auto L = a.left;
  const auto R = a.right;
  return {"L(" + alpha.name + ")", compose(R, compose(alpha.source, L)), compose(R, compose(alpha.target, L)),
          [=](const typename B::Object& x) { return R.map(alpha(L(x))); }};
}

/// Vertical composite beta.alpha.
template <Category C, Category D>
NatTransInstance<C, D> vertical(const NatTransInstance<C, D>& beta, const NatTransInstance<C, D>& alpha) {
  return {beta.name + "." + alpha.name, alpha.source, beta.target,
          [=](const typename C::Object& x) { return D::compose(beta(x), alpha(x)); }};
}

/// Objectwise comparison RN(epsilon_{TLX}) : RNL RTL X -> RNTL X, checked
/// invertible and natural. Throws HypothesisFailed when epsilon_T is not
/// invertible on some listed codomain object.
template <Category B, Category C>
Report lift_composite(const AdjunctionInstance<B, C>& a, const MonadInstance<C>& n, const MonadInstance<C>& t,
                      const Universe<B>& base, const std::vector<typename C::Object>& codomain_objects) {
  const auto L = a.left;
  const auto R = a.right;
  for (const auto& y : codomain_objects) {
    const auto ty = t.endo(y);
    if (!detail::is_iso<C>(a.counit(ty)))
      throw HypothesisFailed("LRT is not isomorphic to T at " + C::describe(y));
  }
  const MonadInstance<B> lifted_n = lift_monad(a, n);
  const MonadInstance<B> lifted_t = lift_monad(a, t);
  const FunctorInstance<B, B> composite = compose(lifted_n.endo, lifted_t.endo);
  const FunctorInstance<B, B> direct = compose(R, compose(compose(n.endo, t.endo), L));
  NatTransInstance<B, B> phi{"phi", composite, direct, [=](const typename B::Object& x) {
                               return R.map(n.endo.map(a.counit(t.endo(L(x)))));
                             }};
  Report report;
  for (const auto& x : base.objects) {
    Verdict v = Verdict::ok();
    try {
      if (!detail::is_iso<B>(phi(x))) v = Verdict::fail("comparison is not invertible");
    } catch (const std::exception& e) {
      v = Verdict::fail(e.what());
    }
    report.add(B::describe(x), "composite.iso", v);
  }
  report.merge(check_naturality(phi, base));
  return report;
}

/// The multiplication is invertible at every listed object.
template <Category C>
Report check_idempotent(const MonadInstance<C>& t, const std::vector<typename C::Object>& objects) {
  Report report;
  for (const auto& x : objects) {
    Verdict v = Verdict::ok();
    try {
      if (!detail::is_iso<C>(t.mult(x))) v = Verdict::fail("multiplication is not invertible");
    } catch (const std::exception& e) {
      v = Verdict::fail(e.what());
    }
    report.add(C::describe(x), t.name + ".idempotent", v);
  }
  return report;
}

}  // namespace stonekit::cat

#endif
