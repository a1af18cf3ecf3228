#include "stonekit/universe.hpp"

#include <algorithm>
#include <random>

#include "stonekit/error.hpp"

namespace stonekit {

namespace {

std::vector<std::string> digit_names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::to_string(i));
  return out;
}

bool transitive(const std::vector<Mask>& up) {
  for (std::size_t x = 0; x < up.size(); ++x) {
    Mask reach = 0;
    for_each_member(up[x], [&](std::size_t y) { reach |= up[y]; });
    if (reach != up[x]) return false;
  }
  return true;
}

/// Calls f on each reflexive relation given by rows of up-sets.
template <class F>
void for_each_reflexive(std::size_t n, F f) {
  const std::size_t pairs = n * (n ? n - 1 : 0);
  std::vector<Mask> up(n);
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs); ++code) {
    std::size_t k = 0;
    for (std::size_t x = 0; x < n; ++x) {
      up[x] = bit(x);
      for (std::size_t y = 0; y < n; ++y) {
        if (x == y) continue;
        if ((code >> k++) & 1) up[x] |= bit(y);
      }
    }
    f(up);
  }
}

SpaceRef space_of_preorder(const std::vector<Mask>& up) {
  const std::size_t n = up.size();
  std::vector<Mask> opens;
  for (Mask s = 0; s <= full_mask(n); ++s) {
    bool closed = true;
    for_each_member(s, [&](std::size_t x) { closed = closed && is_subset(up[x], s); });
    if (closed) opens.push_back(s);
  }
  return share(FinSpace(digit_names(n), std::move(opens)));
}

}  // namespace

std::vector<FinPoset> posets_up_to_iso(std::size_t n) {
  if (n > 5) throw BudgetExceeded("poset enumeration is limited to 5 elements");
  std::vector<FinPoset> out;
  for_each_reflexive(n, [&](const std::vector<Mask>& up) {
    if (!transitive(up)) return;
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = x + 1; y < n; ++y)
        if (contains(up[x], y) && contains(up[y], x)) return;
    FinPoset p = FinPoset::from_relation(digit_names(n), up);
    for (const FinPoset& q : out)
      if (find_poset_isomorphism(p, q)) return;
    out.push_back(std::move(p));
  });
  return out;
}

std::vector<std::vector<Mask>> labeled_preorders(std::size_t n) {
  if (n > 5) throw BudgetExceeded("preorder enumeration is limited to 5 points");
  std::vector<std::vector<Mask>> out;
  for_each_reflexive(n, [&](const std::vector<Mask>& up) {
    if (transitive(up)) out.push_back(up);
  });
  return out;
}

std::vector<SpaceRef> labeled_topologies(std::size_t n) {
  std::vector<SpaceRef> out;
  for (const auto& up : labeled_preorders(n)) out.push_back(space_of_preorder(up));
  return out;
}

std::vector<SpaceRef> topologies_by_families(std::size_t n) {
  if (n > 4) throw BudgetExceeded("family enumeration is limited to 4 points");
  const Mask everything = full_mask(n);
  // Candidate opens other than the empty and the full set.
  std::vector<Mask> middle;
  for (Mask s = 1; s < everything; ++s) middle.push_back(s);
  std::vector<SpaceRef> out;
  std::vector<Mask> chosen;
  // Depth-first over subfamilies, pruning as soon as a pair fails to close.
  auto closed_with = [&](Mask s) {
    for (Mask t : chosen) {
      const Mask u = s | t;
      const Mask i = s & t;
      auto ok = [&](Mask v) {
        return v == 0 || v == everything || v == s || std::find(chosen.begin(), chosen.end(), v) != chosen.end();
      };
      // Unions and intersections may involve later members, so only check
      // against members already decided smaller than s.
      if ((u < s && !ok(u)) || (i < s && !ok(i))) return false;
    }
    return true;
  };
  std::vector<Mask> family;
  auto finish = [&]() {
    family.assign(chosen.begin(), chosen.end());
    family.push_back(0);
    family.push_back(everything);
    for (Mask a : family)
      for (Mask b : family)
        if (std::find(family.begin(), family.end(), a | b) == family.end() ||
            std::find(family.begin(), family.end(), a & b) == family.end())
          return;
    out.push_back(share(FinSpace(digit_names(n), family)));
  };
  auto go = [&](auto&& self, std::size_t i) -> void {
    if (i == middle.size()) {
      finish();
      return;
    }
    self(self, i + 1);
    if (closed_with(middle[i])) {
      chosen.push_back(middle[i]);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  if (n == 0) {
    out.push_back(share(FinSpace({}, {0})));
    return out;
  }
  go(go, 0);
  return out;
}

std::vector<NamedSpace> space_universe(std::size_t max_points, std::uint64_t seed, std::size_t sample) {
  if (max_points > 5) throw BudgetExceeded("space universe is limited to 5 points");
  std::vector<NamedSpace> out;
  for (std::size_t n = 0; n <= max_points; ++n) {
    std::vector<SpaceRef> all = labeled_topologies(n);
    std::vector<std::size_t> pick(all.size());
    for (std::size_t i = 0; i < pick.size(); ++i) pick[i] = i;
    if (n == 5 && sample < pick.size()) {
      std::mt19937_64 rng(seed);
      std::shuffle(pick.begin(), pick.end(), rng);
      pick.resize(sample);
      std::sort(pick.begin(), pick.end());
    }
    for (std::size_t i : pick) out.push_back({"top" + std::to_string(n) + "#" + std::to_string(i), all[i]});
  }
  return out;
}

std::vector<NamedLattice> lattice_universe(std::size_t max_size) {
  std::vector<NamedLattice> out;
  for (std::size_t n = 0; n <= 4; ++n) {
    const auto posets = posets_up_to_iso(n);
    for (std::size_t i = 0; i < posets.size(); ++i) {
      LatticeRef l = share(downset_lattice(posets[i]));
      if (l->size() <= max_size) out.push_back({"lat" + std::to_string(n) + "#" + std::to_string(i), l});
    }
  }
  return out;
}

}  // namespace stonekit
