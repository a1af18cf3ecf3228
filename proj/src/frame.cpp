#include "stonekit/frame.hpp"

#include <algorithm>

#include "stonekit/error.hpp"

namespace stonekit {

std::size_t WayBelowRelation::pair_count() const {
  std::size_t total = 0;
  for (Mask r : rows) total += cardinality(r);
  return total;
}

WayBelowRelation way_below(const LatticeRef& l) {
  const std::size_t n = l->size();
  if (n > 20) throw BudgetExceeded("way-below by definition enumerates 2^n covers; n = " + std::to_string(n));
  const std::size_t subsets = std::size_t{1} << n;
  std::vector<std::size_t> joins(subsets);
  joins[0] = l->bot();
  for (std::size_t s = 1; s < subsets; ++s) {
    const std::size_t low = static_cast<std::size_t>(std::countr_zero(s));
    joins[s] = l->join(joins[s & (s - 1)], low);
  }

  WayBelowRelation out{l, std::vector<Mask>(n, 0)};
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      // Every S here is finite, so the largest finite subfamily G is S itself
      // and joins of subfamilies never exceed join(S).
      bool holds = true;
      for (std::size_t s = 0; s < subsets && holds; ++s)
        if (l->leq(b, joins[s]) && !l->leq(a, joins[s])) holds = false;
      if (holds) out.rows[a] |= bit(b);
    }
  }
  return out;
}

WayBelowRelation order_relation(const LatticeRef& l) {
  WayBelowRelation out{l, std::vector<Mask>(l->size(), 0)};
  for (std::size_t a = 0; a < l->size(); ++a) out.rows[a] = l->upset(a);
  return out;
}

Verdict is_stably_compact(const LatticeRef& l) {
  const WayBelowRelation wb = way_below(l);
  const std::size_t n = l->size();
  auto pair = [&](std::size_t a, std::size_t b) { return "(" + l->name(a) + ", " + l->name(b) + ")"; };
  if (!wb.holds(l->bot(), l->bot())) return Verdict::fail("bot is not way below bot");
  if (!wb.holds(l->top(), l->top())) return Verdict::fail("top is not way below top");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (!wb.holds(a, b)) continue;
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d) {
          if (!wb.holds(c, d)) continue;
          if (!wb.holds(l->meet(a, c), l->meet(b, d)))
            return Verdict::fail("meet of " + pair(a, b) + " and " + pair(c, d) + " leaves way-below");
          if (!wb.holds(l->join(a, c), l->join(b, d)))
            return Verdict::fail("join of " + pair(a, b) + " and " + pair(c, d) + " leaves way-below");
        }
    }
  for (std::size_t a = 0; a < n; ++a) {
    Mask below = 0;
    for (std::size_t x = 0; x < n; ++x)
      if (wb.holds(x, a)) below |= bit(x);
    if (l->join_of(below) != a) return Verdict::fail("'" + l->name(a) + "' is not the join of what is way below it");
  }
  return Verdict::ok();
}

bool is_compact_frame(const LatticeRef& l) { return way_below(l).holds(l->top(), l->top()); }

std::size_t pseudocomplement(const Lattice& l, std::size_t a) {
  Mask disjoint = 0;
  for (std::size_t x = 0; x < l.size(); ++x)
    if (l.meet(x, a) == l.bot()) disjoint |= bit(x);
  return l.join_of(disjoint);
}

std::vector<Mask> well_inside(const Lattice& l) {
  std::vector<Mask> rows(l.size(), 0);
  for (std::size_t a = 0; a < l.size(); ++a) {
    const std::size_t star = pseudocomplement(l, a);
    for (std::size_t b = 0; b < l.size(); ++b)
      if (l.join(star, b) == l.top()) rows[a] |= bit(b);
  }
  return rows;
}

bool is_regular(const Lattice& l) {
  const std::vector<Mask> rows = well_inside(l);
  for (std::size_t b = 0; b < l.size(); ++b) {
    Mask inside = 0;
    for (std::size_t a = 0; a < l.size(); ++a)
      if (contains(rows[a], b)) inside |= bit(a);
    if (l.join_of(inside) != b) return false;
  }
  return true;
}

namespace {

bool complemented(const Lattice& l, std::size_t x) {
  for (std::size_t y = 0; y < l.size(); ++y)
    if (l.meet(x, y) == l.bot() && l.join(x, y) == l.top()) return true;
  return false;
}

}  // namespace

bool is_boolean(const Lattice& l) {
  for (std::size_t x = 0; x < l.size(); ++x)
    if (!complemented(l, x)) return false;
  return true;
}

Coreflection creg_coreflection(const LatticeRef& l) {
  std::vector<std::size_t> keep;
  for (std::size_t x = 0; x < l->size(); ++x)
    if (complemented(*l, x)) keep.push_back(x);
  std::vector<std::string> names;
  std::vector<Mask> up(keep.size(), 0);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    names.push_back(l->name(keep[i]));
    for (std::size_t j = 0; j < keep.size(); ++j)
      if (l->leq(keep[i], keep[j])) up[i] |= bit(j);
  }
  std::vector<std::size_t> original;
  FinPoset order = FinPoset::from_relation(std::move(names), std::move(up), &original);
  LatticeRef center = share(DistLattice::from_order(std::move(order)));
  std::vector<std::size_t> a(keep.size());
  for (std::size_t k = 0; k < a.size(); ++k) a[k] = keep[original[k]];
  LatticeHom inclusion(center, l, std::move(a));
  return Coreflection{std::move(center), std::move(inclusion)};
}

LatticeRef boolean_lattice(std::size_t k) {
  std::vector<std::string> atoms;
  for (std::size_t i = 0; i < k; ++i) atoms.push_back(std::to_string(i));
  std::vector<Mask> sets;
  std::vector<std::string> names;
  for (Mask s = 0; s <= full_mask(k); ++s) {
    sets.push_back(s);
    names.push_back(subset_name(atoms, s));
  }
  return inclusion_lattice(sets, names).lattice;
}

Verdict check_creg_couniversality(const LatticeRef& l, std::size_t max_rank) {
  const Coreflection cr = creg_coreflection(l);
  for (std::size_t k = 0; k <= max_rank; ++k) {
    const LatticeRef b = boolean_lattice(k);
    const auto into_center = enumerate_homs(*b, *cr.center);
    for (const auto& h : enumerate_homs(*b, *l)) {
      std::size_t factorisations = 0;
      for (const auto& g : into_center) {
        bool same = true;
        for (std::size_t x = 0; x < g.size() && same; ++x) same = cr.inclusion(g[x]) == h[x];
        factorisations += same ? 1 : 0;
      }
      if (factorisations != 1)
        return Verdict::fail("a homomorphism from 2^" + std::to_string(k) + " has " + std::to_string(factorisations) +
                             " factorisations through the Boolean center");
    }
  }
  return Verdict::ok();
}

// ---------------------------------------------------------------------------

std::size_t Spectrum::point_of(Mask filter) const {
  auto it = std::find(filters.begin(), filters.end(), filter);
  if (it == filters.end()) throw InvalidInput("not a point of the spectrum");
  return static_cast<std::size_t>(it - filters.begin());
}

Mask Spectrum::basic_open(std::size_t a) const {
  Mask out = 0;
  for (std::size_t p = 0; p < filters.size(); ++p)
    if (contains(filters[p], a)) out |= bit(p);
  return out;
}

Spectrum spectrum(const LatticeRef& l) {
  Spectrum out;
  std::vector<std::string> names;
  for (const LatticeHom& p : homs_to_2(l)) {
    Mask ones = 0;
    for (std::size_t a = 0; a < l->size(); ++a)
      if (p(a) == 1) ones |= bit(a);
    out.filters.push_back(ones);
    const Mask least = l->order().minimal(ones);
    if (cardinality(least) == 1)
      names.push_back("up(" + l->name(static_cast<std::size_t>(std::countr_zero(least))) + ")");
    else
      names.push_back(subset_name(l->order().names(), ones));
  }
  std::vector<Mask> opens;
  for (std::size_t a = 0; a < l->size(); ++a) opens.push_back(out.basic_open(a));
  out.space = share(FinSpace(std::move(names), std::move(opens)));
  return out;
}

SpatialityResult spatiality_iso(const LatticeRef& l) {
  const Spectrum sp = spectrum(l);
  const SetLattice opens = open_set_frame(*sp.space);
  std::vector<std::size_t> a(l->size());
  for (std::size_t x = 0; x < a.size(); ++x) a[x] = opens.element_of(sp.basic_open(x));
  LatticeHom hom(l, opens.lattice, std::move(a));
  const bool iso = hom.injective() && hom.surjective();
  return SpatialityResult{std::move(hom), iso};
}

// ---------------------------------------------------------------------------

namespace {

void require_ideal_of(const LatticeRef& l, const Ideal& ideal) {
  if (!same_lattice(l, ideal.home) || !is_ideal(*l, ideal.members))
    throw ForeignIdeal("argument is not an ideal of the expected lattice");
}

}  // namespace

Ideal comonad_c(const LatticeRef& l, const Ideal& ideal) {
  require_ideal_of(l, ideal);
  const SetLattice jl = ideal_lattice(l);
  Mask members = 0;
  for (std::size_t k = 0; k < jl.sets.size(); ++k)
    if (contains(ideal.members, l->join_of(jl.sets[k]))) members |= bit(k);
  return Ideal{jl.lattice, members};
}

Ideal comonad_c_via_image(const LatticeRef& l, const Ideal& ideal) {
  require_ideal_of(l, ideal);
  return ideal_map_image(down_hom(l), ideal);
}

LatticeHom comonad_c_hom(const LatticeRef& l) {
  const SetLattice jl = ideal_lattice(l);
  const SetLattice jjl = ideal_lattice(jl.lattice);
  std::vector<std::size_t> a(jl.sets.size());
  for (std::size_t k = 0; k < a.size(); ++k) a[k] = jjl.element_of(comonad_c(l, Ideal{l, jl.sets[k]}).members);
  return LatticeHom(jl.lattice, jjl.lattice, std::move(a));
}

std::size_t comonad_counit(const LatticeRef& l, const Ideal& ideal) {
  require_ideal_of(l, ideal);
  return l->join_of(ideal.members);
}

CoalgebraCandidate coalgebra_gamma(const LatticeRef& l) {
  const WayBelowRelation wb = way_below(l);
  CoalgebraCandidate out{l, std::vector<Mask>(l->size(), 0)};
  for (std::size_t a = 0; a < l->size(); ++a)
    for (std::size_t x = 0; x < l->size(); ++x)
      if (wb.holds(x, a)) out.structure[a] |= bit(x);
  return out;
}

Verdict check_coalgebra(const LatticeRef& l, const CoalgebraCandidate& candidate) {
  if (!same_lattice(l, candidate.home) || candidate.structure.size() != l->size())
    return Verdict::fail("candidate does not live over the lattice");
  for (std::size_t a = 0; a < l->size(); ++a)
    if (!is_ideal(*l, candidate.structure[a]))
      return Verdict::fail("structure of '" + l->name(a) + "' is not an ideal");

  const SetLattice jl = ideal_lattice(l);
  std::vector<std::size_t> assignment(l->size());
  for (std::size_t a = 0; a < l->size(); ++a) assignment[a] = jl.element_of(candidate.structure[a]);
  if (auto why = hom_violation(*l, *jl.lattice, assignment))
    return Verdict::fail("structure map is not a lattice homomorphism: " + *why);
  const LatticeHom gamma(l, jl.lattice, assignment);

  for (std::size_t a = 0; a < l->size(); ++a)
    if (l->join_of(candidate.structure[a]) != a)
      return Verdict::fail("counit law fails at '" + l->name(a) + "'");

  for (std::size_t a = 0; a < l->size(); ++a) {
    const Ideal g{l, candidate.structure[a]};
    const Ideal lhs = comonad_c(l, g);
    const Ideal rhs = ideal_map_image(gamma, g);
    if (lhs.members != rhs.members) return Verdict::fail("coassociativity fails at '" + l->name(a) + "'");
  }
  return Verdict::ok();
}

bool is_proper_frame_hom(const LatticeHom& h) {
  const CoalgebraCandidate src = coalgebra_gamma(h.source());
  const CoalgebraCandidate tgt = coalgebra_gamma(h.target());
  for (std::size_t a = 0; a < h.source()->size(); ++a) {
    const Ideal image = ideal_map_image(h, Ideal{h.source(), src.structure[a]});
    if (image.members != tgt.structure[h(a)]) return false;
  }
  return true;
}

}  // namespace stonekit
