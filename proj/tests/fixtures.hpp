#ifndef STONEKIT_TESTS_FIXTURES_HPP
#define STONEKIT_TESTS_FIXTURES_HPP

// Small named structures and brute-force oracles shared by the unit tests.
// The oracles work from raw definitions over all subsets and never call the
// library routine they are compared with.

#include <string>
#include <utility>
#include <vector>

#include "stonekit/bits.hpp"
#include "stonekit/lattice.hpp"
#include "stonekit/order.hpp"
#include "stonekit/space.hpp"

namespace fixtures {

using stonekit::Mask;

inline stonekit::FinPoset poset(std::vector<std::string> elements,
                                std::vector<std::pair<std::string, std::string>> pairs) {
  return stonekit::order_closure(elements, pairs);
}

inline stonekit::LatticeRef lattice(std::vector<std::string> elements,
                                    std::vector<std::pair<std::string, std::string>> pairs) {
  return stonekit::share(stonekit::DistLattice::from_order(poset(std::move(elements), std::move(pairs))));
}

/// 0 < 1 < ... < n-1, named by digits.
inline stonekit::LatticeRef chain(std::size_t n) {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(std::to_string(i));
    if (i > 0) pairs.emplace_back(std::to_string(i - 1), std::to_string(i));
  }
  return lattice(names, pairs);
}

/// 0 < m < 1.
inline stonekit::LatticeRef chain3() { return lattice({"0", "m", "1"}, {{"0", "m"}, {"m", "1"}}); }

/// The four-element Boolean algebra with atoms a and b.
inline stonekit::LatticeRef diamond() {
  return lattice({"0", "a", "b", "1"}, {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}});
}

inline stonekit::LatticeRef one() { return lattice({"0"}, {}); }

inline stonekit::SpaceRef space(std::vector<std::string> points, std::vector<Mask> opens) {
  return stonekit::share(stonekit::FinSpace::generated_by(std::move(points), opens));
}

/// Points 0 and 1 with {1} open.
inline stonekit::SpaceRef sierpinski() { return space({"0", "1"}, {0b10}); }

inline stonekit::SpaceRef discrete(std::size_t n) {
  std::vector<std::string> names;
  std::vector<Mask> opens;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(std::to_string(i));
    opens.push_back(stonekit::bit(i));
  }
  return space(names, opens);
}

inline stonekit::SpaceRef indiscrete(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
  return space(names, {});
}

inline stonekit::SpaceRef point() { return discrete(1); }

// Oracles ------------------------------------------------------------------

/// Join of a subset read off the order alone: the least upper bound.
inline std::size_t sup(const stonekit::Lattice& l, Mask s) {
  for (std::size_t c = 0; c < l.size(); ++c) {
    bool upper = true;
    stonekit::for_each_member(s, [&](std::size_t x) { upper = upper && l.leq(x, c); });
    if (!upper) continue;
    bool least = true;
    for (std::size_t d = 0; d < l.size() && least; ++d) {
      bool du = true;
      stonekit::for_each_member(s, [&](std::size_t x) { du = du && l.leq(x, d); });
      if (du && !l.leq(c, d)) least = false;
    }
    if (least) return c;
  }
  return l.size();
}

inline std::vector<Mask> brute_ideals(const stonekit::Lattice& l) {
  std::vector<Mask> out;
  for (Mask s = 1; s <= l.all(); ++s) {
    bool ok = true;
    for (std::size_t a = 0; a < l.size() && ok; ++a) {
      if (!stonekit::contains(s, a)) continue;
      for (std::size_t b = 0; b < l.size() && ok; ++b) {
        if (l.leq(b, a) && !stonekit::contains(s, b)) ok = false;
        if (stonekit::contains(s, b) && !stonekit::contains(s, sup(l, stonekit::bit(a) | stonekit::bit(b)))) ok = false;
      }
    }
    if (ok) out.push_back(s);
  }
  return out;
}

/// 1-sets of the maps l -> 2 preserving the bounds and binary meets and joins.
inline std::vector<Mask> brute_homs_to_2(const stonekit::Lattice& l) {
  std::vector<Mask> out;
  for (Mask s = 0; s <= l.all(); ++s) {
    bool ok = stonekit::contains(s, l.top()) && !stonekit::contains(s, l.bot());
    for (std::size_t a = 0; a < l.size() && ok; ++a)
      for (std::size_t b = 0; b < l.size() && ok; ++b) {
        const bool ia = stonekit::contains(s, a), ib = stonekit::contains(s, b);
        if (stonekit::contains(s, l.meet(a, b)) != (ia && ib)) ok = false;
        if (stonekit::contains(s, l.join(a, b)) != (ia || ib)) ok = false;
      }
    if (ok) out.push_back(s);
  }
  return out;
}

/// a << b from the definition, over every subset S of the carrier.
inline bool brute_way_below(const stonekit::Lattice& l, std::size_t a, std::size_t b) {
  for (Mask s = 0; s <= l.all(); ++s) {
    if (!l.leq(b, sup(l, s))) continue;
    bool found = false;
    stonekit::for_each_submask(s, [&](Mask g) { found = found || l.leq(a, sup(l, g)); });
    if (!found) return false;
  }
  return true;
}

}  // namespace fixtures

#endif
