#include <doctest.h>

#include "fixtures.hpp"
#include "stonekit/category.hpp"
#include "stonekit/error.hpp"
#include "stonekit/instances.hpp"
#include "stonekit/universe.hpp"

using namespace stonekit;
using namespace stonekit::cat;

namespace {

std::vector<SpaceRef> spaces_upto(std::size_t n) {
  std::vector<SpaceRef> out;
  for (std::size_t k = 0; k <= n; ++k)
    for (const SpaceRef& x : labeled_topologies(k)) out.push_back(x);
  return out;
}

std::vector<LatticeRef> lattices_upto(std::size_t size) {
  std::vector<LatticeRef> out;
  for (const NamedLattice& n : lattice_universe(size)) out.push_back(n.lattice);
  return out;
}

std::vector<ContinuousMap> maps_between(const std::vector<SpaceRef>& xs) {
  std::vector<ContinuousMap> out;
  for (const SpaceRef& x : xs)
    for (const SpaceRef& y : xs)
      for (ContinuousMap& f : enumerate_continuous_maps(x, y)) out.push_back(std::move(f));
  return out;
}

}  // namespace

TEST_CASE("filter monad laws on small spaces") {
  const auto xs = spaces_upto(3);
  CHECK(check_monad_laws(filter_monad(), xs).passed());
  const auto small = spaces_upto(2);
  const Universe<Top> u{small, maps_between(small)};
  const auto f = filter_monad();
  CHECK(check_functor_laws(f.endo, u).passed());
  CHECK(check_naturality(f.unit, u).passed());
  CHECK(check_naturality(f.mult, u).passed());
}

TEST_CASE("ideal monad and comonad laws") {
  const auto ls = lattices_upto(8);
  CHECK(check_monad_laws(ideal_monad(), ls).passed());
  CHECK(check_comonad_laws(ideal_comonad(), ls).passed());
  CHECK(check_monad_laws(ideal_locale_monad(), ls).passed());
  CHECK(check_comonad_laws(center_comonad(), ls).passed());
  CHECK(check_comonad_laws(center_ideal_comonad(), ls).passed());
}

TEST_CASE("open/spectrum adjunction") {
  const auto xs = spaces_upto(3);
  const auto ls = lattices_upto(8);
  CHECK(check_adjunction(open_spectrum_adjunction(), xs, ls).passed());
  CHECK(check_adjunction(free_frame_adjunction(), ls, ls).passed());
}

TEST_CASE("lifting along the adjunction") {
  const auto a = open_spectrum_adjunction();
  const auto t = ideal_locale_monad();
  const auto ls = lattices_upto(8);
  const auto xs = spaces_upto(3);

  const LiftedLaw<Top, Loc> law = lift_law(a, t, ls);
  CHECK(law.report.passed());
  CHECK(law.report.results.size() == 2 * ls.size());
  CHECK(check_monad_laws(lift_monad(a, t), xs).passed());
  CHECK(check_monad_laws(lift_monad(a, identity_monad<Loc>()), xs).passed());

  for (const LatticeRef& l : ls) {
    const AlgebraInstance<Loc> alg = ideal_locale_algebra(l);
    CHECK(check_algebra(t, alg).pass);
    const AlgebraInstance<Top> k = comparison_algebra(a, t, alg);
    CHECK(check_algebra(lift_monad(a, t), k).pass);
    CHECK(check_round_trip_codomain(a, t, alg).pass);
  }
  CHECK(check_counit_iso(a, t, xs).pass);

  // The pairing is a monad morphism from F to the lifted monad.
  CHECK(check_monad_morphism(pairing_transformation(), filter_monad(), lift_monad(a, t), xs).passed());

  const Universe<Top> base{spaces_upto(2), maps_between(spaces_upto(2))};
  CHECK(lift_composite(a, center_locale_monad(), t, base, ls).passed());
  CHECK(check_idempotent(lift_monad(a, center_ideal_locale_monad()), xs).passed());
}

TEST_CASE("closure initiality") {
  const SpaceRef s = fixtures::sierpinski();
  CHECK(closure_initiality(ContinuousMap::identity(s)));

  // {1} as a subspace of the Sierpinski space, and {0,1} inside a three-point chain.
  CHECK(closure_initiality(ContinuousMap(fixtures::point(), s, {1})));
  const SpaceRef chain = fixtures::space({"0", "1", "2"}, {0b100, 0b110});
  const SpaceRef sub = fixtures::space({"0", "1"}, {0b10});
  CHECK(closure_initiality(ContinuousMap(sub, chain, {0, 1})));

  const ClosureInitiality r =
      closure_initiality_report(ContinuousMap(fixtures::discrete(2), fixtures::indiscrete(2), {0, 1}));
  CHECK_FALSE(r.c_initial);
  CHECK(r.closure_operator.pass);
  CHECK(r.witness.find("{0}") != std::string::npos);

  // Closure of a monad on subsets obeys the monad laws for any space.
  for (const SpaceRef& x : spaces_upto(3)) {
    std::vector<Mask> subsets;
    for (Mask m = 0; m <= x->all(); ++m) subsets.push_back(m);
    CHECK(check_monad_laws(closure_monad(x), subsets).passed());
  }
}

TEST_CASE("fault fixtures are caught") {
  const SpaceRef d2 = fixtures::discrete(2);
  const Report swapped = check_monad_laws(swapped_filter_monad(), {d2});
  CHECK_FALSE(swapped.passed());
  REQUIRE(swapped.first_failure() != nullptr);
  CHECK(swapped.first_failure()->law.find("unit") != std::string::npos);

  const LatticeRef diamond = boolean_lattice(2);
  CHECK_FALSE(check_adjunction(twisted_counit_adjunction(), {}, {diamond}).passed());

  const auto t = ideal_locale_monad();
  const auto skewed = skewed_counit_adjunction(ideal_lattice(diamond).lattice);
  const Report pentagon = lift_law(skewed, t, {diamond}).report;
  CHECK_FALSE(pentagon.passed());
  CHECK(pentagon.first_failure()->law == "lambda[" + t.name + "].multiplication");
  // Without an automorphism to twist by, the skewed counit is genuine.
  CHECK(lift_law(skewed, t, {two_lattice()}).report.passed());

  const auto bogus = bogus_ideal_locale_algebra(diamond);
  REQUIRE(bogus.has_value());
  CHECK_THROWS_AS(comparison_algebra(open_spectrum_adjunction(), t, *bogus), NotAnAlgebra);

  const auto collapsed = collapsed_counit_adjunction();
  const AlgebraInstance<Top> alg{collapsed.right(diamond), Top::identity(collapsed.right(diamond))};
  CHECK_THROWS_AS(inverse_comparison(collapsed, t, alg), CounitNotIso);

  const Universe<Top> base{{d2}, {}};
  CHECK_THROWS_AS(lift_composite(collapsed, center_locale_monad(), t, base, {diamond}), HypothesisFailed);
}

TEST_CASE("thin category of subsets") {
  CHECK_THROWS_AS(Subsets::arrow(0b01, 0b10), TypeMismatch);
  const auto f = Subsets::arrow(0b01, 0b11);
  CHECK(Subsets::equal(Subsets::compose(Subsets::identity(0b11), f), f));
  CHECK_FALSE(Subsets::inverse(f).has_value());
}
