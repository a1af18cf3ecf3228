#include <doctest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "stonekit/document.hpp"
#include "stonekit/error.hpp"
#include "stonekit/suites.hpp"
#include "stonekit/topology.hpp"
#include "stonekit/universe.hpp"

#ifndef STONEKIT_DATA_DIR
#error "STONEKIT_DATA_DIR must name the fixture directory"
#endif

using namespace stonekit;

namespace {

std::string data(const std::string& file) { return std::string(STONEKIT_DATA_DIR) + "/" + file; }

std::set<std::vector<Mask>> families(const std::vector<SpaceRef>& xs) {
  std::set<std::vector<Mask>> out;
  for (const SpaceRef& x : xs) {
    std::vector<Mask> opens = x->opens();
    std::sort(opens.begin(), opens.end());
    out.insert(opens);
  }
  return out;
}

std::size_t count_lines(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
  return n;
}

std::string parse_error(const std::string& text) {
  try {
    parse_document(text, "doc");
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("topology counts") {
  const std::size_t expected[] = {1, 1, 4, 29, 355, 6942};
  for (std::size_t n = 0; n <= 5; ++n) CHECK(labeled_topologies(n).size() == expected[n]);
  for (std::size_t n = 0; n <= 4; ++n) {
    const auto by_order = labeled_topologies(n);
    const auto by_family = topologies_by_families(n);
    CHECK(by_family.size() == by_order.size());
    CHECK(families(by_family) == families(by_order));
  }
}

TEST_CASE("posets and lattice universe") {
  const std::size_t expected[] = {1, 1, 2, 5, 16};
  for (std::size_t n = 0; n <= 4; ++n) {
    const auto ps = posets_up_to_iso(n);
    CHECK(ps.size() == expected[n]);
    for (std::size_t i = 0; i < ps.size(); ++i)
      for (std::size_t j = i + 1; j < ps.size(); ++j) CHECK_FALSE(find_poset_isomorphism(ps[i], ps[j]).has_value());
  }
  const auto ls = lattice_universe();
  CHECK(ls.size() == 25);
  for (const NamedLattice& l : ls) CHECK(l.lattice->size() <= 16);
  // Empty poset, point, 2-chain, 2-antichain, 3-chain.
  CHECK(lattice_universe(4).size() == 5);
}

TEST_CASE("space universe sampling") {
  const auto a = space_universe(5, 7, 16);
  const auto b = space_universe(5, 7, 16);
  const auto c = space_universe(5, 8, 16);
  REQUIRE(a.size() == 1 + 1 + 4 + 29 + 355 + 16);
  CHECK(a.size() == c.size());
  bool same = true, differs = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    same = same && a[i].id == b[i].id && *a[i].space == *b[i].space;
    differs = differs || !(*a[i].space == *c[i].space);
  }
  CHECK(same);
  CHECK(differs);
  CHECK(space_universe(3).size() == 35);
  CHECK(space_universe(3)[34].id == "top3#28");
}

TEST_CASE("document parsing and round trip") {
  const std::string text = "name: \"diamond\"\nelements: [\"0\",\"a\",\"b\",\"1\"]\nleq: [[\"0\",\"a\"],[\"0\",\"b\"],[\"a\",\"1\"],[\"b\",\"1\"]]\n";
  const Document doc = parse_document(text);
  const LatticeRef l = load_lattice(std::get<LatticeDocument>(doc));
  CHECK(save_lattice("diamond", *l) == text);

  const std::string space = "name: \"s\"\npoints: [\"0\",\"1\"]\nopens: [[],[\"1\"],[\"0\",\"1\"]]\n";
  const SpaceRef x = load_space(std::get<SpaceDocument>(parse_document(space)));
  CHECK(save_space("s", *x) == space);
  CHECK(*x == *fixtures::sierpinski());

  // Saved text loads back to the same structure for every universe member.
  for (const NamedLattice& n : lattice_universe()) {
    const LatticeRef back = load_lattice(std::get<LatticeDocument>(parse_document(save_lattice(n.id, *n.lattice))));
    CHECK(*back == *n.lattice);
  }
  for (const SpaceRef& s : labeled_topologies(3)) {
    const std::string saved = save_space("t", *s);
    CHECK(save_space("t", *load_space(std::get<SpaceDocument>(parse_document(saved)))) == saved);
  }
}

TEST_CASE("document errors name the line") {
  CHECK(parse_error("name: \"x\"\nelements: [\"a\"]\ncolour: 1\n") == "doc:3: unknown key 'colour'");
  CHECK(parse_error("name: \"x\"\nelements: [\"a\"\n") == "doc:2: value of 'elements' is not valid JSON");
  CHECK(parse_error("name: \"x\"\nname: \"y\"\nelements: []\n") == "doc:2: duplicate key 'name'");
  CHECK(parse_error("# c\nname: \"x\"\npoints: [\"0\"]\nopens: [[\"9\"]]\n") ==
        "doc:4: 'opens' mentions undeclared '9'");
  CHECK(parse_error("elements: [\"a\"]\n") == "doc:2: missing key 'name'");
  CHECK(parse_error("just text\n") == "doc:1: expected 'key: value'");
  CHECK_THROWS_AS(read_document(data("missing.lattice")), ParseError);
}

TEST_CASE("fixture files") {
  CHECK(load_lattice(std::get<LatticeDocument>(read_document(data("diamond.lattice"))))->size() == 4);
  CHECK(load_lattice(std::get<LatticeDocument>(read_document(data("chain3.lattice"))))->size() == 3);
  CHECK_THROWS_AS(load_lattice(std::get<LatticeDocument>(read_document(data("m3.lattice")))), NotDistributive);
  const SpaceRef s = load_space(std::get<SpaceDocument>(read_document(data("sierpinski.space"))));
  CHECK(*s == *fixtures::sierpinski());
  CHECK_FALSE(is_t0(*load_space(std::get<SpaceDocument>(read_document(data("indiscrete2.space"))))));
  CHECK(load_space(std::get<SpaceDocument>(read_document(data("discrete2.space"))))->opens().size() == 4);
}

TEST_CASE("DOT export") {
  const std::string chain = lattice_dot("c", *fixtures::chain3());
  CHECK(count_lines(chain, " -> ") == 2);
  CHECK(count_lines(lattice_dot("d", *fixtures::diamond()), " -> ") == 4);
  const std::string s = space_dot("s", *fixtures::sierpinski());
  CHECK(count_lines(s, " -> ") == 1);
  CHECK(s.find("\"0\" -> \"1\";") != std::string::npos);
  CHECK(space_dot("i", *fixtures::indiscrete(2)).find("dir=both") != std::string::npos);
}

TEST_CASE("suites") {
  CHECK(suite_names().size() == 13);
  CHECK_THROWS_AS(run_suite("nope", {}), InvalidInput);
  const SuiteReport faults = run_suite("faults", {});
  CHECK(faults.failures() == 9);
  CHECK(faults.with_law("lambda[K^op].unit").front().pass);
  const SuiteReport deg = run_suite("degeneracy", {});
  CHECK(deg.passed());
  CHECK(deg.with_law("waybelow=leq").size() == 25);
  const SuiteLine line{"u", "law", false, "why"};
  CHECK(line.format() == "u law FAIL why");
}
