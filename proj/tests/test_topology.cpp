#include <doctest.h>

#include "fixtures.hpp"
#include "stonekit/error.hpp"
#include "stonekit/frame.hpp"
#include "stonekit/space.hpp"
#include "stonekit/topology.hpp"
#include "stonekit/universe.hpp"

using namespace stonekit;

namespace {

std::size_t count_maps_brute(const FinSpace& x, const FinSpace& y) {
  std::size_t total = 1, found = 0;
  for (std::size_t i = 0; i < x.size(); ++i) total *= y.size();
  std::vector<std::size_t> f(x.size());
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    for (auto& v : f) {
      v = c % y.size();
      c /= y.size();
    }
    bool ok = true;
    for (Mask v : y.opens()) {
      Mask pre = 0;
      for (std::size_t p = 0; p < x.size(); ++p)
        if (contains(v, f[p])) pre |= bit(p);
      ok = ok && x.is_open(pre);
    }
    found += ok;
  }
  return found;
}

/// Sierpinski plus an isolated point 2.
SpaceRef sierpinski_plus_point() { return fixtures::space({"0", "1", "2"}, {0b010, 0b100, 0b011}); }

}  // namespace

TEST_CASE("spaces and maps") {
  CHECK_THROWS_AS(FinSpace({"0", "1"}, {0b00, 0b01, 0b10}), NotATopology);
  const SpaceRef s = fixtures::sierpinski();
  CHECK(s->opens().size() == 3);
  CHECK(s->closure(bit(1)) == s->all());
  CHECK(s->closure(bit(0)) == bit(0));
  CHECK_THROWS_AS(ContinuousMap(s, s, {1, 0}), NotContinuous);
  for (const SpaceRef& x : {s, fixtures::discrete(2), fixtures::indiscrete(2), sierpinski_plus_point()})
    for (const SpaceRef& y : {s, fixtures::discrete(2), fixtures::indiscrete(2)})
      CHECK(enumerate_continuous_maps(x, y).size() == count_maps_brute(*x, *y));
}

TEST_CASE("open-set frames") {
  const SetLattice os = open_set_frame(*fixtures::sierpinski());
  CHECK(find_lattice_isomorphism(*os.lattice, *fixtures::chain3()).has_value());
  const SetLattice od = open_set_frame(*fixtures::discrete(2));
  CHECK(find_lattice_isomorphism(*od.lattice, *fixtures::diamond()).has_value());
  const SpaceRef x = fixtures::sierpinski();
  const LatticeHom id = preimage_hom(ContinuousMap::identity(x));
  for (std::size_t a = 0; a < id.source()->size(); ++a) CHECK(id(a) == a);
}

TEST_CASE("specialization and T0") {
  const SpaceRef s = fixtures::sierpinski();
  const FinPoset p = specialization_poset(*s);
  CHECK(p.pair_count() == 3);
  CHECK(is_t0(*s));

  const SpaceRef ind = fixtures::indiscrete(2);
  CHECK_FALSE(is_t0(*ind));
  CHECK_THROWS_AS(specialization_poset(*ind), CycleError);
  CHECK(t0_quotient(ind).space->size() == 1);

  const SpaceRef d = fixtures::discrete(3);
  CHECK(specialization_poset(*d).pair_count() == 3);
  const Quotient q = t0_quotient(d);
  CHECK(q.space->size() == 3);
  CHECK(q.projection.bijective());

  const Quotient qi = t0_quotient(ind);
  CHECK(check_quotient_universality(qi, {fixtures::sierpinski(), fixtures::discrete(2), fixtures::point()}).pass);
}

TEST_CASE("filter space") {
  const FilterSpace fs = filter_space(fixtures::sierpinski());
  CHECK(fs.filters.size() == 2);
  CHECK(find_homeomorphism(*fs.space, *fixtures::sierpinski()).has_value());
  CHECK(filter_space(fixtures::indiscrete(2)).space->size() == 1);
  CHECK(filter_space(fixtures::point()).space->size() == 1);

  // Filter count equals the prime filters of the open-set frame.
  for (std::size_t n = 0; n <= 3; ++n)
    for (const SpaceRef& x : labeled_topologies(n))
      CHECK(filter_space(x).filters.size() == fixtures::brute_homs_to_2(*open_set_frame(*x).lattice).size());
}

TEST_CASE("filter functor on maps") {
  const SpaceRef s = fixtures::sierpinski();
  const OpenPrimeFilter e1 = monad_eta(s, 1);
  CHECK(filter_map_image(ContinuousMap::identity(s), e1) == e1);

  const SpaceRef pt = fixtures::point();
  const ContinuousMap to_point(s, pt, {0, 0});
  CHECK(filter_map_image(to_point, e1) == monad_eta(pt, 0));

  const ContinuousMap inc(pt, s, {1});
  CHECK(filter_map_image(inc, monad_eta(pt, 0)) == e1);
  CHECK_THROWS_AS(filter_map_image(inc, e1), ForeignFilter);
}

TEST_CASE("unit and multiplication") {
  const SpaceRef s = fixtures::sierpinski();
  const SetLattice os = open_set_frame(*s);
  const std::size_t full = os.element_of(s->all());
  const std::size_t one = os.element_of(bit(1));
  CHECK(monad_eta(s, 1).members == (bit(one) | bit(full)));
  CHECK(monad_eta(s, 0).members == bit(full));

  const SpaceRef ind = fixtures::indiscrete(2);
  CHECK(monad_eta(ind, 0) == monad_eta(ind, 1));

  const FilterSpace fs = filter_space(s);
  const ContinuousMap eta_f = eta_map(fs.space);
  const ContinuousMap f_eta = filter_map(eta_map(s));
  const ContinuousMap mu = mu_map(s);
  for (std::size_t p = 0; p < fs.space->size(); ++p) {
    CHECK(mu(eta_f(p)) == p);
    CHECK(mu(f_eta(p)) == p);
  }
  CHECK_THROWS_AS(monad_mu(s, monad_eta(s, 0)), ForeignFilter);
}

TEST_CASE("filter algebras") {
  const SpaceRef s = fixtures::sierpinski();
  const FAlgebra a = canonical_f_algebra(s);
  REQUIRE(a.structure.has_value());
  const ContinuousMap eta = eta_map(s);
  for (std::size_t x = 0; x < s->size(); ++x) CHECK((*a.structure)(eta(x)) == x);
  CHECK(check_f_algebra(s, *a.structure).pass);

  const FilterSpace fs = filter_space(s);
  const ContinuousMap constant(fs.space, s, std::vector<std::size_t>(fs.space->size(), 1));
  CHECK_FALSE(check_f_algebra(s, constant).pass);

  const FAlgebra none = canonical_f_algebra(fixtures::indiscrete(2));
  CHECK_FALSE(none.structure.has_value());
  REQUIRE(none.witness.has_value());
  CHECK(none.witness->first != none.witness->second);

  for (const SpaceRef& x : labeled_topologies(4))
    CHECK(canonical_f_algebra(x).structure.has_value() == is_t0(*x));

  CHECK(is_proper_map(ContinuousMap::identity(s)));
  const SpaceRef ind = fixtures::indiscrete(2);
  CHECK_THROWS_AS(is_proper_map(ContinuousMap::identity(ind)), NoCanonicalAlgebra);
}

TEST_CASE("sobrification") {
  CHECK(sobrification(fixtures::indiscrete(2)).spectrum.space->size() == 1);
  const Sobrification s = sobrification(fixtures::sierpinski());
  CHECK(s.sober);
  CHECK(sobrification(fixtures::discrete(3)).sober);
  for (const SpaceRef& x : labeled_topologies(3)) CHECK(sobrification(x).sober == is_t0(*x));
}

TEST_CASE("pairing") {
  const Pairing s = pairing_iso(fixtures::sierpinski());
  CHECK(s.homeomorphism);
  CHECK(s.filters.filters.size() == 2);
  CHECK(s.spectrum.space->size() == 2);
  CHECK(pairing_iso(fixtures::point()).homeomorphism);
  const SpaceRef chain = fixtures::space({"0", "1", "2"}, {0b100, 0b110});
  const Pairing c = pairing_iso(chain);
  CHECK(c.homeomorphism);
  CHECK(c.filters.space->size() == c.spectrum.space->size());
}

TEST_CASE("Hausdorff reflection") {
  CHECK(hausdorff_reflection(fixtures::sierpinski()).space->size() == 1);
  const Quotient d = hausdorff_reflection(fixtures::discrete(2));
  CHECK(d.projection.bijective());
  const Quotient sp = hausdorff_reflection(sierpinski_plus_point());
  CHECK(find_homeomorphism(*sp.space, *fixtures::discrete(2)).has_value());
}

TEST_CASE("compactification square") {
  const CechStone s = cech_stone_square(fixtures::sierpinski());
  CHECK(s.iso);
  CHECK(s.pointfree_side->size() == 1);
  CHECK(s.pointset_side->size() == 1);
  const CechStone d = cech_stone_square(fixtures::discrete(2));
  CHECK(d.iso);
  CHECK(find_homeomorphism(*d.pointset_side, *fixtures::discrete(2)).has_value());
  const CechStone i = cech_stone_square(fixtures::indiscrete(2));
  CHECK(i.iso);
  CHECK(i.pointfree_side->size() == 1);
}

TEST_CASE("ultrafilters") {
  for (const SpaceRef& x : {fixtures::discrete(2), fixtures::indiscrete(2), fixtures::sierpinski()}) {
    const UltrafilterSpace u = ultrafilter_space(x);
    CHECK(find_homeomorphism(*u.space, *x).has_value());
    CHECK(ultrafilter_comparison(x).pass);
  }
}
