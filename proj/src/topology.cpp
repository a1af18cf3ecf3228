#include "stonekit/topology.hpp"

#include <algorithm>

#include "stonekit/error.hpp"

namespace stonekit {

bool Preorder::antisymmetric() const {
  for (std::size_t x = 0; x < up.size(); ++x) {
    bool ok = true;
    for_each_member(up[x], [&](std::size_t y) { ok = ok && (y == x || !contains(up[y], x)); });
    if (!ok) return false;
  }
  return true;
}

Preorder specialization_order(const FinSpace& x) {
  Preorder out{x.names(), std::vector<Mask>(x.size(), 0)};
  for (std::size_t p = 0; p < x.size(); ++p) out.up[p] = x.minimal_open(p);
  return out;
}

bool is_t0(const FinSpace& x) { return specialization_order(x).antisymmetric(); }

FinPoset specialization_poset(const FinSpace& x) {
  Preorder pre = specialization_order(x);
  for (std::size_t p = 0; p < x.size(); ++p)
    for_each_member(pre.up[p], [&](std::size_t q) {
      if (q != p && pre.leq(q, p))
        throw CycleError("points '" + x.name(p) + "' and '" + x.name(q) + "' are indistinguishable");
    });
  return FinPoset::from_relation(std::move(pre.names), std::move(pre.up));
}

namespace {

/// Quotient of x by a partition given as class index per point.
Quotient quotient_by(const SpaceRef& x, const std::vector<std::size_t>& cls, std::size_t classes, bool discrete) {
  std::vector<Mask> members(classes, 0);
  for (std::size_t p = 0; p < x->size(); ++p) members[cls[p]] |= bit(p);
  std::vector<std::string> names;
  for (Mask m : members) {
    if (cardinality(m) == 1) {
      names.push_back(x->name(static_cast<std::size_t>(std::countr_zero(m))));
    } else {
      std::string s = "[";
      bool first = true;
      for_each_member(m, [&](std::size_t p) {
        if (!first) s += ',';
        s += x->name(p);
        first = false;
      });
      names.push_back(s + "]");
    }
  }
  std::vector<Mask> opens;
  if (discrete) {
    if (classes > 20) throw BudgetExceeded("discrete quotient with more than 20 points");
    for (Mask s = 0; s <= full_mask(classes); ++s) opens.push_back(s);
  } else {
    for (Mask u : x->opens()) {
      Mask image = 0;
      for_each_member(u, [&](std::size_t p) { image |= bit(cls[p]); });
      opens.push_back(image);
    }
  }
  SpaceRef q = share(FinSpace(std::move(names), std::move(opens)));
  return Quotient{q, ContinuousMap(x, q, cls)};
}

/// Class index per point, classes numbered by first member.
std::vector<std::size_t> partition_by(std::size_t n, const std::vector<Mask>& separators, std::size_t& classes) {
  std::vector<std::size_t> cls(n, n);
  classes = 0;
  for (std::size_t p = 0; p < n; ++p) {
    if (cls[p] != n) continue;
    for (std::size_t q = p; q < n; ++q) {
      bool same = true;
      for (Mask s : separators) same = same && contains(s, p) == contains(s, q);
      if (same) cls[q] = classes;
    }
    ++classes;
  }
  return cls;
}

}  // namespace

Quotient t0_quotient(const SpaceRef& x) {
  std::size_t classes = 0;
  const auto cls = partition_by(x->size(), x->opens(), classes);
  return quotient_by(x, cls, classes, false);
}

Verdict check_quotient_universality(const Quotient& q, const std::vector<SpaceRef>& targets) {
  const SpaceRef& x = q.projection.source();
  for (const SpaceRef& z : targets) {
    const auto through = enumerate_continuous_maps(q.space, z);
    for (const ContinuousMap& f : enumerate_continuous_maps(x, z)) {
      std::size_t count = 0;
      for (const ContinuousMap& g : through) count += compose(g, q.projection) == f ? 1 : 0;
      if (count != 1)
        return Verdict::fail("a map into a " + std::to_string(z->size()) + "-point space factors " +
                             std::to_string(count) + " times");
    }
  }
  return Verdict::ok();
}

// ---------------------------------------------------------------------------

std::size_t FilterSpace::point_of(Mask filter) const {
  auto it = std::find(filters.begin(), filters.end(), filter);
  if (it == filters.end()) throw ForeignFilter("not an open prime filter of the base space");
  return static_cast<std::size_t>(it - filters.begin());
}

Mask FilterSpace::star(std::size_t open) const {
  Mask out = 0;
  for (std::size_t p = 0; p < filters.size(); ++p)
    if (contains(filters[p], open)) out |= bit(p);
  return out;
}

FilterSpace filter_space(const SpaceRef& x) {
  FilterSpace out;
  out.base = x;
  out.opens = open_set_frame(*x);
  std::vector<std::string> names;
  for (const PrimeFilter& f : prime_filters(out.opens.lattice)) {
    out.filters.push_back(f.members);
    const Mask least = out.opens.lattice->order().minimal(f.members);
    if (cardinality(least) == 1)
      names.push_back("up(" + out.opens.lattice->name(static_cast<std::size_t>(std::countr_zero(least))) + ")");
    else
      names.push_back(subset_name(out.opens.lattice->order().names(), f.members));
  }
  // The stars are already closed under finite unions and intersections; the
  // constructor rejects the family otherwise.
  std::vector<Mask> stars;
  for (std::size_t k = 0; k < out.opens.sets.size(); ++k) stars.push_back(out.star(k));
  out.space = share(FinSpace(std::move(names), std::move(stars)));
  return out;
}

namespace {

void require_filter_over(const SpaceRef& x, const OpenPrimeFilter& filter, const SetLattice& opens) {
  if (!same_space(x, filter.home)) throw ForeignFilter("filter does not live over the expected space");
  if (!is_prime_filter(*opens.lattice, filter.members)) throw ForeignFilter("not an open prime filter");
}

}  // namespace

OpenPrimeFilter filter_map_image(const ContinuousMap& f, const OpenPrimeFilter& filter) {
  const SetLattice from = open_set_frame(*f.source());
  const SetLattice to = open_set_frame(*f.target());
  require_filter_over(f.source(), filter, from);
  Mask members = 0;
  for (std::size_t k = 0; k < to.sets.size(); ++k)
    if (contains(filter.members, from.element_of(f.preimage(to.sets[k])))) members |= bit(k);
  return OpenPrimeFilter{f.target(), members};
}

ContinuousMap filter_map(const ContinuousMap& f) {
  const FilterSpace from = filter_space(f.source());
  const FilterSpace to = filter_space(f.target());
  std::vector<std::size_t> a(from.filters.size());
  for (std::size_t p = 0; p < a.size(); ++p)
    a[p] = to.point_of(filter_map_image(f, OpenPrimeFilter{f.source(), from.filters[p]}).members);
  return ContinuousMap(from.space, to.space, std::move(a));
}

OpenPrimeFilter monad_eta(const SpaceRef& x, std::size_t point) {
  if (point >= x->size()) throw InvalidInput("point out of range");
  const SetLattice opens = open_set_frame(*x);
  Mask members = 0;
  for (std::size_t k = 0; k < opens.sets.size(); ++k)
    if (contains(opens.sets[k], point)) members |= bit(k);
  return OpenPrimeFilter{x, members};
}

ContinuousMap eta_map(const SpaceRef& x) {
  const FilterSpace fx = filter_space(x);
  std::vector<std::size_t> a(x->size());
  for (std::size_t p = 0; p < a.size(); ++p) a[p] = fx.point_of(monad_eta(x, p).members);
  return ContinuousMap(x, fx.space, std::move(a));
}

namespace {

Mask mu_members(const FilterSpace& fx, const SetLattice& outer_opens, Mask outer_filter) {
  Mask members = 0;
  for (std::size_t k = 0; k < fx.opens.sets.size(); ++k)
    if (contains(outer_filter, outer_opens.element_of(fx.star(k)))) members |= bit(k);
  return members;
}

}  // namespace

OpenPrimeFilter monad_mu(const SpaceRef& x, const OpenPrimeFilter& filter) {
  const FilterSpace fx = filter_space(x);
  const SetLattice outer = open_set_frame(*fx.space);
  require_filter_over(fx.space, filter, outer);
  return OpenPrimeFilter{x, mu_members(fx, outer, filter.members)};
}

ContinuousMap mu_map(const SpaceRef& x) {
  const FilterSpace fx = filter_space(x);
  const FilterSpace ffx = filter_space(fx.space);
  std::vector<std::size_t> a(ffx.filters.size());
  for (std::size_t q = 0; q < a.size(); ++q) a[q] = fx.point_of(mu_members(fx, ffx.opens, ffx.filters[q]));
  return ContinuousMap(ffx.space, fx.space, std::move(a));
}

FAlgebra canonical_f_algebra(const SpaceRef& x) {
  const ContinuousMap eta = eta_map(x);
  for (std::size_t p = 0; p < x->size(); ++p)
    for (std::size_t q = p + 1; q < x->size(); ++q)
      if (eta(p) == eta(q)) return FAlgebra{std::nullopt, std::pair{p, q}};
  // Finite T0 spaces are sober, so the unit is a homeomorphism onto FX.
  auto inv = inverse(eta);
  if (!inv) throw std::logic_error("unit of a finite T0 space is not a homeomorphism");
  return FAlgebra{std::move(inv), std::nullopt};
}

Verdict check_f_algebra(const SpaceRef& x, const ContinuousMap& alpha) {
  const ContinuousMap eta = eta_map(x);
  if (!same_space(alpha.source(), eta.target()) || !same_space(alpha.target(), x))
    return Verdict::fail("structure map is not FX -> X");
  if (compose(alpha, eta) != ContinuousMap::identity(x)) return Verdict::fail("unit law alpha . eta = id fails");
  if (compose(alpha, filter_map(alpha)) != compose(alpha, mu_map(x)))
    return Verdict::fail("associativity alpha . F(alpha) = alpha . mu fails");
  return Verdict::ok();
}

bool is_proper_map(const ContinuousMap& f) {
  const FAlgebra ax = canonical_f_algebra(f.source());
  const FAlgebra ay = canonical_f_algebra(f.target());
  if (!ax.structure) throw NoCanonicalAlgebra("source is not T0");
  if (!ay.structure) throw NoCanonicalAlgebra("target is not T0");
  return compose(*ay.structure, filter_map(f)) == compose(f, *ax.structure);
}

Sobrification sobrification(const SpaceRef& x) {
  const SetLattice opens = open_set_frame(*x);
  Spectrum sp = spectrum(opens.lattice);
  std::vector<std::size_t> a(x->size());
  for (std::size_t p = 0; p < a.size(); ++p) a[p] = sp.point_of(monad_eta(x, p).members);
  ContinuousMap unit(x, sp.space, std::move(a));
  const bool sober = inverse(unit).has_value();
  return Sobrification{std::move(sp), std::move(unit), sober};
}

Pairing pairing_iso(const SpaceRef& x) {
  FilterSpace fx = filter_space(x);
  const SetLattice ideals = ideal_lattice(fx.opens.lattice);
  Spectrum sp = spectrum(ideals.lattice);
  std::vector<std::size_t> a(fx.filters.size());
  for (std::size_t p = 0; p < a.size(); ++p) {
    Mask ones = 0;
    for (std::size_t k = 0; k < ideals.sets.size(); ++k)
      if ((ideals.sets[k] & fx.filters[p]) != 0) ones |= bit(k);
    a[p] = sp.point_of(ones);
  }
  ContinuousMap map(fx.space, sp.space, std::move(a));
  const bool homeo = inverse(map).has_value();
  return Pairing{std::move(fx), std::move(sp), std::move(map), homeo};
}

Quotient hausdorff_reflection(const SpaceRef& x) {
  std::size_t classes = 0;
  const auto cls = partition_by(x->size(), x->clopens(), classes);
  return quotient_by(x, cls, classes, true);
}

CechStone cech_stone_square(const SpaceRef& x) {
  const FilterSpace fx = filter_space(x);
  const SetLattice opens = open_set_frame(*fx.space);
  const Coreflection center = creg_coreflection(opens.lattice);
  const Spectrum left = spectrum(center.center);
  const Quotient right = hausdorff_reflection(fx.space);

  CechStone out;
  out.pointfree_side = left.space;
  out.pointset_side = right.space;
  try {
    std::vector<std::size_t> a(right.space->size());
    for (std::size_t q = 0; q < a.size(); ++q) {
      const Mask block = right.projection.preimage(bit(q));
      Mask ones = 0;
      for (std::size_t c = 0; c < center.center->size(); ++c)
        if (is_subset(block, opens.sets[center.inclusion(c)])) ones |= bit(c);
      a[q] = left.point_of(ones);
    }
    ContinuousMap comparison(right.space, left.space, std::move(a));
    out.iso = inverse(comparison).has_value();
    if (!out.iso) out.witness = "comparison is not a homeomorphism";
    out.comparison = std::move(comparison);
  } catch (const Error& e) {
    out.witness = e.what();
  }
  return out;
}

UltrafilterSpace ultrafilter_space(const SpaceRef& x) {
  const std::size_t n = x->size();
  if (n > 5) throw BudgetExceeded("ultrafilter space enumerates the powerset lattice; at most 5 points");
  std::vector<Mask> subsets;
  std::vector<std::string> names;
  for (Mask s = 0; s <= full_mask(n); ++s) {
    subsets.push_back(s);
    names.push_back(subset_name(x->names(), s));
  }
  UltrafilterSpace out;
  out.powerset = inclusion_lattice(subsets, names);
  std::vector<std::string> points;
  for (const PrimeFilter& u : prime_filters(out.powerset.lattice)) {
    out.ultrafilters.push_back(u.members);
    const Mask least = out.powerset.lattice->order().minimal(u.members);
    const Mask generator = out.powerset.sets[static_cast<std::size_t>(std::countr_zero(least))];
    points.push_back("u(" + subset_name(x->names(), generator) + ")");
  }
  std::vector<Mask> hats;
  for (Mask a : x->opens()) {
    const std::size_t element = out.powerset.element_of(a);
    Mask hat = 0;
    for (std::size_t u = 0; u < out.ultrafilters.size(); ++u)
      if (contains(out.ultrafilters[u], element)) hat |= bit(u);
    hats.push_back(hat);
  }
  out.space = share(FinSpace::generated_by(std::move(points), hats));
  return out;
}

Verdict ultrafilter_comparison(const SpaceRef& x) {
  const UltrafilterSpace ux = ultrafilter_space(x);
  if (!find_homeomorphism(*ux.space, *x)) return Verdict::fail("UX is not homeomorphic to X");
  const Quotient t0 = t0_quotient(ux.space);
  const Sobrification sob = sobrification(t0.space);
  const FilterSpace fx = filter_space(x);
  if (!find_homeomorphism(*fx.space, *sob.spectrum.space))
    return Verdict::fail("FX is not homeomorphic to the sobrification of the T0 quotient of UX");
  return Verdict::ok();
}

}  // namespace stonekit
