// Acceptance gate: one line per criterion, nonzero exit when any fails.
//
// Every check is exact; the only tolerance is the wall-clock budget pinned
// next to each criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "stonekit/error.hpp"
#include "stonekit/instances.hpp"
#include "stonekit/lattice.hpp"
#include "stonekit/order.hpp"
#include "stonekit/suites.hpp"
#include "stonekit/topology.hpp"
#include "stonekit/universe.hpp"

using namespace stonekit;

namespace {

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;
  std::function<Verdict()> run;
};

/// Every line of `law` passes, and there are exactly `count` of them
/// (or at least one when count is zero).
Verdict expect(const SuiteReport& r, const std::string& law, std::size_t count = 0) {
  const auto lines = r.with_law(law);
  if (lines.empty()) return Verdict::fail("no lines for " + law);
  if (count != 0 && lines.size() != count)
    return Verdict::fail(law + ": " + std::to_string(lines.size()) + " lines, expected " + std::to_string(count));
  for (const SuiteLine& l : lines)
    if (!l.pass) return Verdict::fail(l.format());
  return Verdict::ok();
}

Verdict all(std::initializer_list<Verdict> vs) {
  for (const Verdict& v : vs)
    if (!v) return v;
  return Verdict::ok();
}

Verdict whole(const SuiteReport& r) {
  for (const SuiteLine& l : r.lines)
    if (!l.pass) return Verdict::fail(l.format());
  return Verdict::ok();
}

std::size_t with_prefix(const SuiteReport& r, const std::string& law, const std::string& prefix) {
  std::size_t n = 0;
  for (const SuiteLine& l : r.with_law(law)) n += l.universe.rfind(prefix, 0) == 0;
  return n;
}

SuiteOptions points(std::size_t n) {
  SuiteOptions o;
  o.max_points = n;
  return o;
}

constexpr std::size_t kLattices = 25;       // downset lattices of posets with at most 4 elements
constexpr std::size_t kSpacesUpTo3 = 35;    // 1 + 1 + 4 + 29 labeled topologies
constexpr std::size_t kSpacesUpTo4 = 390;   // plus 355 on four points

Verdict filter_monad_laws() {
  if (labeled_topologies(3).size() != 29) return Verdict::fail("expected 29 topologies on 3 points");
  if (labeled_topologies(4).size() != 355) return Verdict::fail("expected 355 topologies on 4 points");
  const SuiteReport r = run_suite("monad-f", points(4));
  if (with_prefix(r, "F.associativity", "top3#") != 29) return Verdict::fail("3-point instances != 29");
  if (with_prefix(r, "F.associativity", "top4#") != 355) return Verdict::fail("4-point instances != 355");
  return all({whole(r), expect(r, "F.associativity", kSpacesUpTo4), expect(r, "F.left-unit", kSpacesUpTo4),
              expect(r, "F.right-unit", kSpacesUpTo4), expect(r, "eta.naturality"), expect(r, "mu.naturality")});
}

Verdict ideal_monad_comonad() {
  const SuiteReport i = run_suite("monad-i", {});
  const SuiteReport k = run_suite("comonad-k", {});
  return all({whole(i), whole(k), expect(i, "I.associativity", kLattices), expect(i, "I.left-unit", kLattices),
              expect(i, "I.right-unit", kLattices), expect(k, "K.coassociativity", kLattices),
              expect(k, "K.left-counit", kLattices), expect(k, "K.right-counit", kLattices),
              expect(k, "c-direct-equals-J(down)", kLattices)});
}

Verdict pairing() {
  const SuiteReport r = run_suite("pairing", points(3));
  return all({whole(r), expect(r, "pairing.homeomorphism", kSpacesUpTo3), expect(r, "pair.naturality"),
              expect(r, "pair.unit", kSpacesUpTo3), expect(r, "pair.multiplication", kSpacesUpTo3)});
}

Verdict spatiality() {
  const SuiteReport r = run_suite("spatiality", {});
  return all({whole(r), expect(r, "spatiality", kLattices)});
}

Verdict algebras() {
  const SuiteReport r = run_suite("algebras", points(3));
  return all({whole(r), expect(r, "f-algebra.characterization", kSpacesUpTo3)});
}

Verdict coalgebras() {
  const SuiteReport r = run_suite("coalgebras", {});
  const std::size_t small = lattice_universe(6).size();
  return all({whole(r), expect(r, "gamma.coalgebra", kLattices), expect(r, "gamma.unique", small)});
}

Verdict lifting() {
  const SuiteReport r = run_suite("lifting", points(3));
  return all({whole(r), expect(r, "lambda[K^op].unit", kLattices), expect(r, "lambda[K^op].multiplication", kLattices),
              expect(r, "K(canonical).algebra", kLattices), expect(r, "K*K(canonical).iso", kLattices),
              expect(r, "KK*(transported).iso"), expect(r, "composite.iso"), expect(r, "phi.naturality"),
              expect(r, "L(CReg.J^op).idempotent", kSpacesUpTo3), expect(r, "L(join^op).unit", kSpacesUpTo3),
              expect(r, "L(join^op).multiplication", kSpacesUpTo3)});
}

Verdict cech_stone() {
  const SuiteReport r = run_suite("cechstone", points(3));
  return all({whole(r), expect(r, "cechstone.iso", kSpacesUpTo3)});
}

Verdict degeneracy() {
  const SuiteReport r = run_suite("degeneracy", {});
  return all({whole(r), expect(r, "waybelow=leq", kLattices), expect(r, "ideals-principal", kLattices)});
}

Verdict negatives() {
  const SpaceRef indiscrete = share(FinSpace({"0", "1"}, {0b00, 0b11}));
  const FAlgebra alg = canonical_f_algebra(indiscrete);
  if (alg.structure) return Verdict::fail("indiscrete pair has an F-algebra");
  if (!alg.witness || alg.witness->first == alg.witness->second) return Verdict::fail("no witness pair of points");

  try {
    DistLattice::from_order(order_closure({"0", "a", "b", "c", "1"}, {{"0", "a"},
                                                                      {"0", "b"},
                                                                      {"0", "c"},
                                                                      {"a", "1"},
                                                                      {"b", "1"},
                                                                      {"c", "1"}}));
    return Verdict::fail("M3 accepted as distributive");
  } catch (const NotDistributive& e) {
    if (std::string(e.what()).find("(a, b, c)") == std::string::npos)
      return Verdict::fail(std::string("witness does not name the atoms: ") + e.what());
  }

  const SpaceRef discrete = share(FinSpace({"0", "1"}, {0b00, 0b01, 0b10, 0b11}));
  const cat::ClosureInitiality c = cat::closure_initiality_report(ContinuousMap(discrete, indiscrete, {0, 1}));
  if (c.c_initial) return Verdict::fail("discrete -> indiscrete reported c-initial");
  if (c.witness.empty()) return Verdict::fail("no witness subset");

  const SuiteReport f = run_suite("faults", {});
  if (f.failures() != 9) return Verdict::fail("fault suite: " + std::to_string(f.failures()) + " FAIL, expected 9");
  return Verdict::ok();
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "filter monad laws, all topologies on <= 4 points", 60, filter_monad_laws},
      {2, "ideal monad and comonad laws, c = J(down)", 30, ideal_monad_comonad},
      {3, "pairing FX ~ Sigma J O X, natural, monad morphism", 60, pairing},
      {4, "finite spatiality", 10, spatiality},
      {5, "F-algebra exists iff T0, unique", 60, algebras},
      {6, "gamma = down is the unique coalgebra", 60, coalgebras},
      {7, "lifting suite", 120, lifting},
      {8, "compactification square", 60, cech_stone},
      {9, "way-below = order, ideals principal", 30, degeneracy},
      {10, "negative fixtures rejected with witnesses", 30, negatives},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = Verdict::fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (v && secs > c.budget_seconds) v = Verdict::fail("over budget");
    std::printf("[%s] %2d %s (%.2fs / %.0fs)%s%s\n", v ? "PASS" : "FAIL", c.id, c.title.c_str(), secs,
                c.budget_seconds, v ? "" : ": ", v.witness.c_str());
    failed += !v;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
