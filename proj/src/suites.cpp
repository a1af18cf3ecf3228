#include "stonekit/suites.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>

#include "stonekit/error.hpp"
#include "stonekit/frame.hpp"
#include "stonekit/instances.hpp"
#include "stonekit/topology.hpp"

namespace stonekit {

using namespace cat;

std::string SuiteLine::format() const {
  std::string s = universe + " " + law + (pass ? " PASS" : " FAIL");
  if (!pass && !witness.empty()) s += " " + witness;
  return s;
}

std::size_t SuiteReport::failures() const {
  return static_cast<std::size_t>(std::count_if(lines.begin(), lines.end(), [](const SuiteLine& l) { return !l.pass; }));
}

std::vector<SuiteLine> SuiteReport::with_law(std::string_view law) const {
  std::vector<SuiteLine> out;
  for (const SuiteLine& l : lines)
    if (l.law == law) out.push_back(l);
  return out;
}

namespace {

constexpr std::array<std::size_t, 6> kTopologyCounts = {1, 1, 4, 29, 355, 6942};

struct Runner {
  SuiteReport report;

  void add(const std::string& id, const std::string& law, const Verdict& v) {
    report.lines.push_back({id, law, v.pass, v.witness});
  }

  /// One line per law, failing with the first failing entry.
  void add(const std::string& id, const Report& r) {
    std::vector<std::string> order;
    std::map<std::string, const LawResult*> first_fail;
    for (const LawResult& x : r.results) {
      if (std::find(order.begin(), order.end(), x.law) == order.end()) order.push_back(x.law);
      if (!x.pass && !first_fail.count(x.law)) first_fail[x.law] = &x;
    }
    for (const std::string& law : order) {
      if (auto it = first_fail.find(law); it != first_fail.end())
        add(id, law, Verdict::fail(it->second->object + ": " + it->second->witness));
      else
        add(id, law, Verdict::ok());
    }
  }

  /// Runs f, turning a library error into a failing line.
  void guarded(const std::string& id, const std::string& law, const std::function<Verdict()>& f) {
    try {
      add(id, law, f());
    } catch (const Error& e) {
      add(id, law, Verdict::fail(e.what()));
    }
  }
};

std::vector<NamedSpace> spaces(const SuiteOptions& o, std::size_t cap = 5) {
  return space_universe(std::min(o.max_points, cap), o.seed, o.sample);
}

std::vector<NamedLattice> lattices(const SuiteOptions& o) { return lattice_universe(o.max_lattice); }

template <class T>
std::vector<T> single(const T& x) {
  return {x};
}

/// Continuous maps between each ordered pair of the given spaces.
struct MapBundle {
  std::string id;
  Universe<Top> maps;
};

std::vector<MapBundle> map_bundles(const std::vector<NamedSpace>& xs) {
  std::vector<MapBundle> out;
  for (const auto& a : xs)
    for (const auto& b : xs) {
      auto maps = enumerate_continuous_maps(a.space, b.space);
      if (maps.empty()) continue;
      out.push_back({a.id + ">" + b.id, {{a.space, b.space}, std::move(maps)}});
    }
  return out;
}

/// All maps among the given spaces in one universe, for functor laws.
Universe<Top> map_universe(const std::vector<NamedSpace>& xs) {
  Universe<Top> u;
  for (const auto& a : xs) u.objects.push_back(a.space);
  for (const auto& a : xs)
    for (const auto& b : xs)
      for (auto& f : enumerate_continuous_maps(a.space, b.space)) u.morphisms.push_back(std::move(f));
  return u;
}

/// Homomorphisms among the universe lattices with at most max_size elements.
Universe<Lat> hom_universe(const SuiteOptions& o, std::size_t max_size) {
  Universe<Lat> u;
  for (const auto& l : lattice_universe(std::min(o.max_lattice, max_size))) u.objects.push_back(l.lattice);
  for (const auto& a : u.objects)
    for (const auto& b : u.objects)
      for (auto& h : enumerate_homs(*a, *b)) u.morphisms.emplace_back(a, b, std::move(h));
  return u;
}

Universe<Loc> opposite(const Universe<Lat>& u) {
  Universe<Loc> out{u.objects, {}};
  for (const auto& h : u.morphisms) out.morphisms.push_back({h});
  return out;
}

// ---------------------------------------------------------------------------

void suite_monad_f(Runner& r, const SuiteOptions& o) {
  for (std::size_t n = 0; n <= std::min<std::size_t>(o.max_points, 5); ++n) {
    const std::size_t count = labeled_topologies(n).size();
    r.add("top" + std::to_string(n), "topology-count",
          count == kTopologyCounts[n]
              ? Verdict::ok()
              : Verdict::fail(std::to_string(count) + " topologies, expected " + std::to_string(kTopologyCounts[n])));
  }
  const MonadInstance<Top> f = filter_monad();
  for (const auto& x : spaces(o)) r.add(x.id, check_monad_laws(f, single(x.space)));
  const Universe<Top> u = map_universe(spaces(o, 2));
  r.add("maps<=2", check_functor_laws(f.endo, u));
  r.add("maps<=2", check_naturality(f.unit, u));
  r.add("maps<=2", check_naturality(f.mult, u));
}

void suite_monad_i(Runner& r, const SuiteOptions& o) {
  const MonadInstance<Lat> t = ideal_monad();
  for (const auto& l : lattices(o)) r.add(l.id, check_monad_laws(t, single(l.lattice)));
  const Universe<Lat> u = hom_universe(o, 5);
  r.add("homs<=5", check_functor_laws(t.endo, u));
  r.add("homs<=5", check_naturality(t.unit, u));
  r.add("homs<=5", check_naturality(t.mult, u));
}

void suite_comonad_k(Runner& r, const SuiteOptions& o) {
  const ComonadInstance<Lat> w = ideal_comonad();
  for (const auto& l : lattices(o)) {
    r.add(l.id, check_comonad_laws(w, single(l.lattice)));
    r.guarded(l.id, "c-direct-equals-J(down)", [&] {
      const SetLattice ideals = ideal_lattice(l.lattice);
      for (Mask members : ideals.sets) {
        const Ideal i{l.lattice, members};
        if (!(comonad_c(l.lattice, i) == comonad_c_via_image(l.lattice, i)))
          return Verdict::fail("at ideal " + subset_name(l.lattice->order().names(), members));
      }
      return Verdict::ok();
    });
  }
  const Universe<Lat> u = hom_universe(o, 5);
  r.add("homs<=5", check_naturality(w.counit, u));
  r.add("homs<=5", check_naturality(w.comult, u));
}

void suite_adjunction_os(Runner& r, const SuiteOptions& o) {
  const auto a = open_spectrum_adjunction();
  const auto xs = spaces(o);
  const auto ls = lattices(o);
  for (const auto& x : xs) r.add(x.id, check_adjunction(a, single(x.space), {}));
  for (const auto& l : ls) {
    r.add(l.id, check_adjunction(a, {}, single(l.lattice)));
    r.guarded(l.id, "spatiality", [&] {
      return spatiality_iso(l.lattice).iso ? Verdict::ok() : Verdict::fail("a -> Sigma_a is not bijective");
    });
    r.add(l.id, check_adjunction(free_frame_adjunction(), single(l.lattice), single(l.lattice)));
  }
  const Universe<Top> maps = map_universe(spaces(o, 2));
  const Universe<Loc> homs = opposite(hom_universe(o, 5));
  r.add("maps<=2", check_functor_laws(a.left, maps));
  r.add("maps<=2", check_naturality(a.unit, maps));
  r.add("homs<=5", check_functor_laws(a.right, homs));
  r.add("homs<=5", check_naturality(a.counit, homs));
}

void suite_lifting(Runner& r, const SuiteOptions& o) {
  const auto a = open_spectrum_adjunction();
  const auto t = ideal_locale_monad();
  const auto lifted = lift_monad(a, t);
  const auto ident = identity_monad<Loc>();
  const auto h = lift_monad(a, ident);
  const auto xs = spaces(o);
  const auto ls = lattices(o);

  for (const auto& l : ls) {
    r.add(l.id, lift_law(a, t, single(l.lattice)).report);
    r.add(l.id, lift_law(a, ident, single(l.lattice)).report);
    r.add(l.id, check_monad_morphism(t.unit, ident, t, single(l.lattice)));
    const AlgebraInstance<Loc> canonical = ideal_locale_algebra(l.lattice);
    r.guarded(l.id, "K(canonical).algebra", [&] { return check_algebra(lifted, comparison_algebra(a, t, canonical)); });
    r.guarded(l.id, "K*K(canonical).iso", [&] { return check_round_trip_codomain(a, t, canonical); });
    const AlgebraInstance<Loc> free{t.endo(l.lattice), t.mult(l.lattice)};
    r.guarded(l.id, "K*K(free).iso", [&] { return check_round_trip_codomain(a, t, free); });
    r.guarded(l.id, "K(canonical).via-lambda", [&] {
      const auto k = comparison_algebra(a, t, canonical);
      const auto lambda = lift_law(a, t, {}).lambda;
      const auto direct = Top::compose(a.right.map(canonical.structure), lambda(l.lattice));
      return k.structure == direct ? Verdict::ok() : Verdict::fail("R(alpha).lambda differs from K");
    });
  }
  for (const auto& x : xs) {
    r.add(x.id, check_monad_laws(lifted, single(x.space)));
    r.add(x.id, check_monad_laws(h, single(x.space)));
    // The unit of the ideal locale monad is a monad morphism Id -> T, and
    // its lift R(e)L is a monad morphism H -> lifted monad.
    const auto rel = lift_of_morphism(a, t.unit);
    r.add(x.id, check_monad_morphism(rel, h, lifted, single(x.space)));
    r.guarded(x.id, "lift(id)=id", [&] {
      const NatTransInstance<Loc, Loc> id{"id", t.endo, t.endo, [t](const LatticeRef& l) { return Loc::identity(t.endo(l)); }};
      return lift_of_morphism(a, id)(x.space) == Top::identity(lifted.endo(x.space))
                 ? Verdict::ok()
                 : Verdict::fail("lift of the identity is not the identity");
    });
    r.guarded(x.id, "lift(b.a)=lift(b).lift(a)", [&] {
      const NatTransInstance<Loc, Loc> id{"id", t.endo, t.endo, [t](const LatticeRef& l) { return Loc::identity(t.endo(l)); }};
      const auto whole = lift_of_morphism(a, vertical(id, t.unit));
      const auto parts = vertical(lift_of_morphism(a, id), lift_of_morphism(a, t.unit));
      return whole(x.space) == parts(x.space) ? Verdict::ok() : Verdict::fail("lift does not preserve composition");
    });
    if (is_t0(*x.space)) {
      r.guarded(x.id, "KK*(transported).iso", [&] {
        const auto alpha = canonical_f_algebra(x.space).structure;
        const auto phi = pairing_iso(x.space);
        const auto back = inverse(phi.map);
        if (!alpha || !back) return Verdict::fail("no canonical structure");
        return check_round_trip_base(a, t, AlgebraInstance<Top>{x.space, Top::compose(*alpha, *back)});
      });
    }
  }
  // Composite CReg.J on locales.
  const auto n = center_locale_monad();
  const auto nt = center_ideal_locale_monad();
  for (const auto& l : ls) {
    r.add(l.id, check_comonad_laws(center_comonad(), single(l.lattice)));
    r.add(l.id, check_comonad_laws(center_ideal_comonad(), single(l.lattice)));
  }
  const auto lifted_nt = lift_monad(a, nt);
  Universe<Top> base = map_universe(spaces(o, 2));
  base.objects.clear();
  for (const auto& x : xs) base.objects.push_back(x.space);
  std::vector<LatticeRef> codomain;
  for (const auto& l : ls) codomain.push_back(l.lattice);
  try {
    const Report comp = lift_composite(a, n, t, base, codomain);
    r.add("composite", comp);
  } catch (const Error& e) {
    r.add("composite", "composite.hypothesis", Verdict::fail(e.what()));
  }
  for (const auto& x : xs) {
    r.add(x.id, check_monad_laws(lifted_nt, single(x.space)));
    r.add(x.id, check_idempotent(lifted_nt, single(x.space)));
  }
  // Closure operators lifted along image -| preimage.
  for (const auto& bundle : map_bundles(spaces(o, 2))) {
    r.guarded(bundle.id, "closure-lift", [&] {
      for (const ContinuousMap& f : bundle.maps.morphisms) {
        const auto report = closure_initiality_report(f);
        if (!report.closure_operator) return report.closure_operator;
        const auto adj = image_preimage_adjunction(f);
        std::vector<Mask> subsets;
        for (Mask s = 0; s <= f.source()->all(); ++s) subsets.push_back(s);
        const Report laws = check_monad_laws(lift_monad(adj, closure_monad(f.target())), subsets);
        if (!laws.passed()) return laws.verdict();
      }
      return Verdict::ok();
    });
  }
}

void suite_pairing(Runner& r, const SuiteOptions& o) {
  const auto a = open_spectrum_adjunction();
  const auto lifted = lift_monad(a, ideal_locale_monad());
  const auto phi = pairing_transformation();
  const auto f = filter_monad();
  const auto xs = spaces(o, 3);
  for (const auto& x : xs) {
    r.guarded(x.id, "pairing.homeomorphism", [&] {
      return pairing_iso(x.space).homeomorphism ? Verdict::ok() : Verdict::fail("pairing map is not invertible");
    });
    r.add(x.id, check_monad_morphism(phi, f, lifted, single(x.space)));
  }
  for (const auto& bundle : map_bundles(xs)) r.add(bundle.id, check_naturality(phi, bundle.maps));
}

void suite_cechstone(Runner& r, const SuiteOptions& o) {
  for (const auto& x : spaces(o, 3))
    r.guarded(x.id, "cechstone.iso", [&] {
      const CechStone c = cech_stone_square(x.space);
      return c.iso ? Verdict::ok() : Verdict::fail(c.witness);
    });
  const Universe<Top> u = map_universe(spaces(o, 2));
  r.add("maps<=2", check_functor_laws(hausdorff_functor(), u));
}

void suite_ultrafilter(Runner& r, const SuiteOptions& o) {
  for (const auto& x : spaces(o)) r.guarded(x.id, "ultrafilter.comparison", [&] { return ultrafilter_comparison(x.space); });
}

void suite_algebras(Runner& r, const SuiteOptions& o) {
  for (const auto& x : spaces(o, 3))
    r.guarded(x.id, "f-algebra.characterization", [&] {
      const SpaceRef fx = filter_space(x.space).space;
      std::vector<ContinuousMap> found;
      for (const ContinuousMap& alpha : enumerate_continuous_maps(fx, x.space))
        if (check_f_algebra(x.space, alpha)) found.push_back(alpha);
      const bool t0 = is_t0(*x.space);
      if (t0 && found.size() != 1) return Verdict::fail(std::to_string(found.size()) + " algebra structures on a T0 space");
      if (!t0 && !found.empty()) return Verdict::fail("algebra structure on a space that is not T0");
      if (t0 && !(found.front() == *canonical_f_algebra(x.space).structure))
        return Verdict::fail("the unique structure is not the inverse of the unit");
      return Verdict::ok();
    });
}

void suite_coalgebras(Runner& r, const SuiteOptions& o) {
  for (const auto& l : lattices(o)) {
    r.guarded(l.id, "gamma.coalgebra", [&] { return check_coalgebra(l.lattice, coalgebra_gamma(l.lattice)); });
    if (l.lattice->size() > 6) continue;
    r.guarded(l.id, "gamma.unique", [&] {
      const SetLattice ideals = ideal_lattice(l.lattice);
      const CoalgebraCandidate gamma = coalgebra_gamma(l.lattice);
      std::size_t passing = 0;
      for (const auto& h : enumerate_homs(*l.lattice, *ideals.lattice)) {
        CoalgebraCandidate c{l.lattice, {}};
        for (std::size_t v : h) c.structure.push_back(ideals.sets[v]);
        if (!check_coalgebra(l.lattice, c)) continue;
        if (c.structure != gamma.structure) return Verdict::fail("a second coalgebra structure passes");
        ++passing;
      }
      return passing == 1 ? Verdict::ok() : Verdict::fail("gamma is not among the passing homomorphisms");
    });
  }
}

void suite_degeneracy(Runner& r, const SuiteOptions& o) {
  for (const auto& l : lattices(o)) {
    r.guarded(l.id, "waybelow=leq", [&] {
      const WayBelowRelation wb = way_below(l.lattice);
      const WayBelowRelation le = order_relation(l.lattice);
      for (std::size_t a = 0; a < wb.rows.size(); ++a)
        if (wb.rows[a] != le.rows[a]) return Verdict::fail("rows differ at " + l.lattice->name(a));
      return Verdict::ok();
    });
    r.guarded(l.id, "ideals-principal", [&] {
      for (Mask s : ideal_lattice(l.lattice).sets) {
        const Mask top = l.lattice->order().maximal(s);
        if (cardinality(top) != 1 || l.lattice->downset(static_cast<std::size_t>(std::countr_zero(top))) != s)
          return Verdict::fail("ideal " + subset_name(l.lattice->order().names(), s) + " is not principal");
      }
      return Verdict::ok();
    });
  }
}

void suite_spatiality(Runner& r, const SuiteOptions& o) {
  for (const auto& l : lattices(o))
    r.guarded(l.id, "spatiality", [&] {
      return spatiality_iso(l.lattice).iso ? Verdict::ok() : Verdict::fail("a -> Sigma_a is not bijective");
    });
}

SpaceRef two_point(bool discrete) {
  std::vector<Mask> opens = {0, 3};
  if (discrete) opens = {0, 1, 2, 3};
  return share(FinSpace({"0", "1"}, opens));
}

void suite_faults(Runner& r, const SuiteOptions&) {
  const SpaceRef discrete = two_point(true);
  const SpaceRef indiscrete = two_point(false);
  r.add("fault:discrete2", check_monad_laws(swapped_filter_monad(), single(discrete)));

  const LatticeRef diamond = boolean_lattice(2);
  r.add("fault:diamond", check_adjunction(twisted_counit_adjunction(), {}, single(diamond)));
  r.add("fault:diamond",
        lift_law(skewed_counit_adjunction(ideal_lattice(diamond).lattice), ideal_locale_monad(), single(diamond))
            .report);

  const auto t = ideal_locale_monad();
  if (auto bogus = bogus_ideal_locale_algebra(diamond)) {
    r.guarded("fault:diamond", "K(bogus)", [&] {
      comparison_algebra(open_spectrum_adjunction(), t, *bogus);
      return Verdict::ok();
    });
  }
  r.guarded("fault:diamond", "K*(collapsed)", [&] {
    const auto a = collapsed_counit_adjunction();
    const AlgebraInstance<Top> alg{a.right(diamond), Top::identity(a.right(diamond))};
    inverse_comparison(a, t, alg);
    return Verdict::ok();
  });

  r.guarded("fault:indiscrete2", "f-algebra.exists", [&] {
    const FAlgebra alg = canonical_f_algebra(indiscrete);
    if (alg.structure) return Verdict::ok();
    return Verdict::fail("points " + indiscrete->name(alg.witness->first) + " and " +
                         indiscrete->name(alg.witness->second) + " have the same neighbourhood filter");
  });
  r.guarded("fault:m3", "distributive", [&] {
    const FinPoset p = order_closure({"0", "a", "b", "c", "1"},
                                     {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "1"}, {"b", "1"}, {"c", "1"}});
    DistLattice::from_order(p);
    return Verdict::ok();
  });
  r.guarded("fault:discrete2>indiscrete2", "c-initial", [&] {
    const ContinuousMap f(discrete, indiscrete, {0, 1});
    const ClosureInitiality c = closure_initiality_report(f);
    return c.c_initial ? Verdict::ok() : Verdict::fail(c.witness);
  });
}

using SuiteFn = void (*)(Runner&, const SuiteOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r = {
      {"monad-f", suite_monad_f},       {"monad-i", suite_monad_i},         {"comonad-k", suite_comonad_k},
      {"adjunction-os", suite_adjunction_os}, {"lifting", suite_lifting}, {"pairing", suite_pairing},
      {"cechstone", suite_cechstone},   {"ultrafilter", suite_ultrafilter}, {"algebras", suite_algebras},
      {"coalgebras", suite_coalgebras}, {"degeneracy", suite_degeneracy},   {"spatiality", suite_spatiality},
      {"faults", suite_faults},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

SuiteReport run_suite(std::string_view name, const SuiteOptions& options) {
  for (const auto& [n, fn] : registry()) {
    if (n != name) continue;
    Runner r;
    fn(r, options);
    return std::move(r.report);
  }
  throw InvalidInput("unknown suite '" + std::string(name) + "'");
}

}  // namespace stonekit
