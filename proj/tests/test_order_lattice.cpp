#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "stonekit/error.hpp"
#include "stonekit/lattice.hpp"
#include "stonekit/order.hpp"

using namespace stonekit;

namespace {

Mask named(const Lattice& l, std::initializer_list<const char*> names) {
  Mask m = 0;
  for (const char* n : names) m |= bit(l.at(n));
  return m;
}

Ideal down(const LatticeRef& l, const char* a) { return monad_unit_down(l, l->at(a)); }

}  // namespace

TEST_CASE("order closure") {
  const FinPoset chain = fixtures::poset({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  CHECK(chain.pair_count() == 6);
  CHECK(chain.leq(chain.at("a"), chain.at("c")));
  CHECK_FALSE(chain.leq(chain.at("c"), chain.at("a")));

  const FinPoset single = fixtures::poset({"a"}, {});
  CHECK(single.size() == 1);
  CHECK(single.pair_count() == 1);

  CHECK_THROWS_AS(fixtures::poset({"a", "b"}, {{"a", "b"}, {"b", "a"}}), CycleError);
  CHECK_THROWS_AS(fixtures::poset({"a"}, {{"a", "z"}}), InvalidInput);
}

TEST_CASE("downset lattices") {
  const DistLattice square = downset_lattice(fixtures::poset({"a", "b"}, {}));
  CHECK(square.size() == 4);
  CHECK(find_lattice_isomorphism(square, *fixtures::diamond()));

  const DistLattice three = downset_lattice(fixtures::poset({"a", "b"}, {{"a", "b"}}));
  CHECK(find_lattice_isomorphism(three, *fixtures::chain3()));

  CHECK(downset_lattice(FinPoset{}).size() == 1);

  // Birkhoff round trip: downsets of the join-irreducibles give back L.
  for (std::size_t n = 1; n <= 5; ++n) {
    const LatticeRef l = fixtures::chain(n);
    CHECK(find_lattice_isomorphism(downset_lattice(join_irreducibles(*l)), *l));
  }
}

TEST_CASE("join irreducibles") {
  const FinPoset j3 = join_irreducibles(*fixtures::chain3());
  CHECK(j3.size() == 2);
  CHECK(j3.pair_count() == 3);

  const FinPoset j22 = join_irreducibles(*fixtures::diamond());
  CHECK(j22.size() == 2);
  CHECK(j22.pair_count() == 2);

  CHECK(join_irreducibles(*fixtures::one()).empty());
}

TEST_CASE("distributivity") {
  CHECK(is_distributive(*fixtures::diamond()));
  for (std::size_t n = 1; n <= 6; ++n) CHECK(is_distributive(*fixtures::chain(n)));

  const FinPoset m3 = fixtures::poset({"0", "a", "b", "c", "1"},
                                      {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "1"}, {"b", "1"}, {"c", "1"}});
  const Lattice l = Lattice::from_order(m3);
  CHECK_FALSE(is_distributive(l));
  const auto w = distributivity_witness(l);
  REQUIRE(w);
  // The witness is three distinct atoms.
  CHECK(l.meet(w->a, l.join(w->b, w->c)) != l.join(l.meet(w->a, w->b), l.meet(w->a, w->c)));
  CHECK_THROWS_AS(DistLattice::from_order(m3), NotDistributive);

  // Two incomparable maxima: no join.
  CHECK_THROWS_AS(Lattice::from_order(fixtures::poset({"0", "a", "b"}, {{"0", "a"}, {"0", "b"}})), NotALattice);
}

TEST_CASE("ideals against the definition") {
  const LatticeRef d = fixtures::diamond();
  CHECK(is_ideal(*d, named(*d, {"0", "a"})));
  CHECK_FALSE(is_ideal(*d, named(*d, {"0", "a", "b"})));
  CHECK_FALSE(is_ideal(*d, 0));

  for (const LatticeRef& l : {fixtures::one(), fixtures::chain(2), fixtures::chain3(), d, fixtures::chain(5)}) {
    std::vector<Mask> lib;
    for (Mask s = 0; s <= l->all(); ++s)
      if (is_ideal(*l, s)) lib.push_back(s);
    CHECK(lib == fixtures::brute_ideals(*l));
  }
}

TEST_CASE("ideal join") {
  const LatticeRef d = fixtures::diamond();
  const Ideal ab[] = {down(d, "a"), down(d, "b")};
  CHECK(ideal_join(d, ab).members == d->all());
  const Ideal single[] = {down(d, "a")};
  CHECK(ideal_join(d, single) == down(d, "a"));
  CHECK(ideal_join(d, std::span<const Ideal>{}).members == bit(d->bot()));

  const LatticeRef c = fixtures::chain3();
  const Ideal pair[] = {down(c, "0"), down(c, "m")};
  CHECK(ideal_join(c, pair) == down(c, "m"));

  CHECK_THROWS_AS(make_ideal(d, named(*d, {"0", "a", "b"})), ForeignIdeal);
}

TEST_CASE("ideal lattice") {
  const SetLattice j3 = ideal_lattice(fixtures::chain3());
  CHECK(find_lattice_isomorphism(*j3.lattice, *fixtures::chain3()));
  const LatticeRef d = fixtures::diamond();
  const SetLattice j22 = ideal_lattice(d);
  CHECK(j22.sets.size() == 4);
  CHECK_FALSE(j22.find(named(*d, {"0", "a", "b"})));
  CHECK(ideal_lattice(fixtures::one()).sets.size() == 1);

  // Element count against the brute-force enumeration.
  for (std::size_t n = 1; n <= 6; ++n) {
    const LatticeRef l = fixtures::chain(n);
    CHECK(ideal_lattice(l).sets.size() == fixtures::brute_ideals(*l).size());
  }
}

TEST_CASE("ideal functor on morphisms") {
  const LatticeRef two = two_lattice();
  const LatticeRef d = fixtures::diamond();
  const LatticeHom into(two, d, {d->bot(), d->top()});
  CHECK(ideal_map_image(into, monad_unit_down(two, two->top())).members == d->all());

  const Ideal a = down(d, "a");
  CHECK(ideal_map_image(LatticeHom::identity(d), a) == a);

  const LatticeRef c = fixtures::chain3();
  const LatticeHom collapse(c, two, {0, 1, 1});
  CHECK(ideal_map_image(collapse, down(c, "m")) == monad_unit_down(two, two->top()));

  CHECK_THROWS_AS(ideal_map_image(collapse, a), ForeignIdeal);
}

TEST_CASE("prime filters and homomorphisms to 2") {
  const LatticeRef c = fixtures::chain3();
  const auto pc = prime_filters(c);
  REQUIRE(pc.size() == 2);
  CHECK(pc[0].members == c->upset(c->at("1")));
  CHECK(pc[1].members == c->upset(c->at("m")));

  const LatticeRef d = fixtures::diamond();
  const auto pd = prime_filters(d);
  REQUIRE(pd.size() == 2);
  for (const PrimeFilter& f : pd) CHECK(f.members != bit(d->top()));

  CHECK(prime_filters(two_lattice()).size() == 1);
  CHECK(homs_to_2(two_lattice()).size() == 1);
  CHECK(homs_to_2(d).size() == 2);

  for (std::size_t n = 1; n <= 7; ++n) {
    const LatticeRef l = fixtures::chain(n);
    CHECK(homs_to_2(l).size() == n - 1);
    std::vector<Mask> lib;
    for (const PrimeFilter& f : prime_filters(l)) lib.push_back(f.members);
    std::sort(lib.begin(), lib.end());
    CHECK(lib == fixtures::brute_homs_to_2(*l));
  }
  for (const LatticeRef& l : {d, fixtures::one()}) {
    std::vector<Mask> lib;
    for (const LatticeHom& h : homs_to_2(l)) {
      Mask ones = 0;
      for (std::size_t a = 0; a < l->size(); ++a)
        if (h(a) == 1) ones |= bit(a);
      lib.push_back(ones);
    }
    std::sort(lib.begin(), lib.end());
    CHECK(lib == fixtures::brute_homs_to_2(*l));
  }
}

TEST_CASE("ideal monad structure") {
  const LatticeRef d = fixtures::diamond();
  CHECK(down(d, "a").members == named(*d, {"0", "a"}));
  CHECK(monad_unit_down(d, d->bot()).members == bit(d->bot()));
  CHECK(monad_unit_down(d, d->top()).members == d->all());

  const SetLattice jd = ideal_lattice(d);
  const LatticeRef jl = jd.lattice;
  const std::size_t da = jd.element_of(down(d, "a").members);
  CHECK(monad_mult_union(d, monad_unit_down(jl, da)) == down(d, "a"));

  const LatticeRef c = fixtures::chain3();
  const SetLattice jc = ideal_lattice(c);
  CHECK(monad_mult_union(c, make_ideal(jc.lattice, jc.lattice->all())).members == c->all());
  CHECK(monad_mult_union(c, monad_unit_down(jc.lattice, jc.lattice->bot())).members == bit(c->bot()));
  CHECK_THROWS_AS(monad_mult_union(c, down(d, "a")), ForeignIdeal);

  const LatticeHom alpha = frame_join_algebra(d);
  for (std::size_t a = 0; a < d->size(); ++a) CHECK(alpha(jd.element_of(d->downset(a))) == a);
  CHECK(alpha(jd.element_of(d->all())) == d->top());
  CHECK(alpha(jd.element_of(bit(d->bot()))) == d->bot());
}

TEST_CASE("lattice homomorphisms") {
  const LatticeRef c = fixtures::chain3();
  CHECK_THROWS_AS(LatticeHom(c, two_lattice(), {0, 1, 0}), NotAHomomorphism);
  const LatticeRef d = fixtures::diamond();
  // Endomorphisms of 2x2: the two automorphisms and the two maps onto {0,1}.
  CHECK(enumerate_homs(*d, *d).size() == 4);
  const LatticeHom id = LatticeHom::identity(d);
  CHECK(compose(id, id) == id);
  CHECK(inverse(id));
  CHECK_FALSE(inverse(LatticeHom(c, two_lattice(), {0, 1, 1})));
}
