#include "stonekit/lattice.hpp"

#include <algorithm>
#include <functional>

#include "stonekit/error.hpp"

namespace stonekit {

Lattice Lattice::from_order(FinPoset order) {
  const std::size_t n = order.size();
  if (n == 0) throw NotALattice("empty order has no bottom element");
  Lattice l;
  l.order_ = std::move(order);
  const FinPoset& p = l.order_;

  const Mask lows = p.minimal(p.all());
  const Mask highs = p.maximal(p.all());
  if (cardinality(lows) != 1) throw NotALattice("no least element");
  if (cardinality(highs) != 1) throw NotALattice("no greatest element");
  l.bot_ = static_cast<std::size_t>(std::countr_zero(lows));
  l.top_ = static_cast<std::size_t>(std::countr_zero(highs));

  l.meet_.assign(n * n, 0);
  l.join_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const Mask below = p.maximal(p.downset(a) & p.downset(b));
      const Mask above = p.minimal(p.upset(a) & p.upset(b));
      if (cardinality(below) != 1)
        throw NotALattice("'" + p.name(a) + "' and '" + p.name(b) + "' have no meet");
      if (cardinality(above) != 1)
        throw NotALattice("'" + p.name(a) + "' and '" + p.name(b) + "' have no join");
      l.meet_[a * n + b] = static_cast<std::size_t>(std::countr_zero(below));
      l.join_[a * n + b] = static_cast<std::size_t>(std::countr_zero(above));
    }
  }
  return l;
}

std::size_t Lattice::join_of(Mask s) const {
  std::size_t acc = bot_;
  for_each_member(s, [&](std::size_t a) { acc = join(acc, a); });
  return acc;
}

std::size_t Lattice::meet_of(Mask s) const {
  std::size_t acc = top_;
  for_each_member(s, [&](std::size_t a) { acc = meet(acc, a); });
  return acc;
}

std::optional<DistributivityWitness> distributivity_witness(const Lattice& l) {
  const std::size_t n = l.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (l.meet(a, l.join(b, c)) != l.join(l.meet(a, b), l.meet(a, c))) return DistributivityWitness{a, b, c};
  return std::nullopt;
}

bool is_distributive(const Lattice& l) { return !distributivity_witness(l); }

DistLattice::DistLattice(Lattice l) : Lattice(std::move(l)) {
  if (auto w = distributivity_witness(*this)) {
    throw NotDistributive("distributive law fails for (" + name(w->a) + ", " + name(w->b) + ", " + name(w->c) +
                          "): " + name(w->a) + " meet (" + name(w->b) + " join " + name(w->c) + ") = " +
                          name(meet(w->a, join(w->b, w->c))) + " but (" + name(w->a) + " meet " + name(w->b) +
                          ") join (" + name(w->a) + " meet " + name(w->c) +
                          ") = " + name(join(meet(w->a, w->b), meet(w->a, w->c))));
  }
}

const LatticeRef& two_lattice() {
  static const LatticeRef two = share(DistLattice::from_order(order_closure({"0", "1"}, {{"0", "1"}})));
  return two;
}

std::optional<std::size_t> SetLattice::find(Mask s) const {
  auto it = std::find(sets.begin(), sets.end(), s);
  if (it == sets.end()) return std::nullopt;
  return static_cast<std::size_t>(it - sets.begin());
}

std::size_t SetLattice::element_of(Mask s) const {
  if (auto i = find(s)) return *i;
  throw InvalidInput("set is not an element of the lattice");
}

SetLattice inclusion_lattice(const std::vector<Mask>& sets, const std::vector<std::string>& names) {
  const std::size_t n = sets.size();
  std::vector<Mask> up(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (is_subset(sets[i], sets[j])) up[i] |= bit(j);
  std::vector<std::size_t> original;
  FinPoset order = FinPoset::from_relation(names, std::move(up), &original);
  SetLattice out;
  out.sets.reserve(n);
  for (std::size_t k = 0; k < n; ++k) out.sets.push_back(sets[original[k]]);
  out.lattice = share(DistLattice::from_order(std::move(order)));
  return out;
}

// ---------------------------------------------------------------------------

std::optional<std::string> hom_violation(const Lattice& s, const Lattice& t, const std::vector<std::size_t>& f) {
  if (f.size() != s.size()) return "assignment is not total";
  for (std::size_t v : f)
    if (v >= t.size()) return "assignment leaves the target";
  if (f[s.bot()] != t.bot()) return "bottom is not preserved";
  if (f[s.top()] != t.top()) return "top is not preserved";
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = a + 1; b < s.size(); ++b) {
      if (f[s.meet(a, b)] != t.meet(f[a], f[b]))
        return "meet of '" + s.name(a) + "' and '" + s.name(b) + "' is not preserved";
      if (f[s.join(a, b)] != t.join(f[a], f[b]))
        return "join of '" + s.name(a) + "' and '" + s.name(b) + "' is not preserved";
    }
  return std::nullopt;
}

LatticeHom::LatticeHom(LatticeRef source, LatticeRef target, std::vector<std::size_t> assignment)
    : source_(std::move(source)), target_(std::move(target)), assignment_(std::move(assignment)) {
  if (auto why = hom_violation(*source_, *target_, assignment_)) throw NotAHomomorphism(*why);
}

LatticeHom LatticeHom::identity(const LatticeRef& l) {
  std::vector<std::size_t> a(l->size());
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = i;
  return LatticeHom(l, l, std::move(a));
}

bool LatticeHom::injective() const {
  Mask seen = 0;
  for (std::size_t v : assignment_) {
    if (contains(seen, v)) return false;
    seen |= bit(v);
  }
  return true;
}

bool LatticeHom::surjective() const {
  Mask seen = 0;
  for (std::size_t v : assignment_) seen |= bit(v);
  return seen == target_->all();
}

LatticeHom compose(const LatticeHom& g, const LatticeHom& f) {
  if (!same_lattice(f.target(), g.source())) throw TypeMismatch("lattice homomorphisms are not composable");
  std::vector<std::size_t> a(f.source()->size());
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = g(f(i));
  return LatticeHom(f.source(), g.target(), std::move(a));
}

std::optional<LatticeHom> inverse(const LatticeHom& f) {
  if (!f.injective() || !f.surjective()) return std::nullopt;
  std::vector<std::size_t> a(f.target()->size());
  for (std::size_t i = 0; i < f.assignment().size(); ++i) a[f(i)] = i;
  if (!is_lattice_hom(*f.target(), *f.source(), a)) return std::nullopt;
  return LatticeHom(f.target(), f.source(), std::move(a));
}

std::vector<std::vector<std::size_t>> enumerate_homs(const Lattice& s, const Lattice& t) {
  const std::size_t n = s.size();
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> f(n, 0);
  // Indices follow a linear extension, so meets of assigned elements are
  // assigned; joins are checked once their value is assigned.
  auto consistent = [&](std::size_t i) {
    for (std::size_t a = 0; a <= i; ++a) {
      const std::size_t m = s.meet(a, i);
      if (f[m] != t.meet(f[a], f[i])) return false;
      const std::size_t j = s.join(a, i);
      if (j <= i && f[j] != t.join(f[a], f[i])) return false;
    }
    for (std::size_t a = 0; a < i; ++a)
      for (std::size_t b = a + 1; b < i; ++b)
        if (s.join(a, b) == i && f[i] != t.join(f[a], f[b])) return false;
    return true;
  };
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i == n) {
      out.push_back(f);
      return;
    }
    for (std::size_t v = 0; v < t.size(); ++v) {
      if (i == s.bot() && v != t.bot()) continue;
      if (i == s.top() && v != t.top()) continue;
      f[i] = v;
      if (consistent(i)) go(i + 1);
    }
  };
  go(0);
  return out;
}

std::optional<std::vector<std::size_t>> find_lattice_isomorphism(const Lattice& a, const Lattice& b) {
  return find_poset_isomorphism(a.order(), b.order());
}

// ---------------------------------------------------------------------------

bool is_ideal(const Lattice& l, Mask s) {
  if (s == 0 || !is_subset(s, l.all()) || !l.order().is_downset(s)) return false;
  bool closed = true;
  for_each_member(s, [&](std::size_t a) {
    for_each_member(s, [&](std::size_t b) { closed = closed && contains(s, l.join(a, b)); });
  });
  return closed;
}

bool is_filter(const Lattice& l, Mask s) {
  if (!contains(s, l.top()) || !is_subset(s, l.all()) || !l.order().is_upset(s)) return false;
  bool closed = true;
  for_each_member(s, [&](std::size_t a) {
    for_each_member(s, [&](std::size_t b) { closed = closed && contains(s, l.meet(a, b)); });
  });
  return closed;
}

bool is_prime_filter(const Lattice& l, Mask s) {
  if (!is_filter(l, s) || contains(s, l.bot())) return false;
  for (std::size_t a = 0; a < l.size(); ++a)
    for (std::size_t b = a + 1; b < l.size(); ++b)
      if (contains(s, l.join(a, b)) && !contains(s, a) && !contains(s, b)) return false;
  return true;
}

Ideal make_ideal(const LatticeRef& l, Mask s) {
  if (!is_ideal(*l, s)) throw ForeignIdeal("subset " + subset_name(l->order().names(), s) + " is not an ideal");
  return Ideal{l, s};
}

namespace {

void require_home(const LatticeRef& l, const Ideal& ideal) {
  if (!same_lattice(l, ideal.home)) throw ForeignIdeal("ideal does not live over the expected lattice");
}

}  // namespace

Ideal ideal_join(const LatticeRef& l, std::span<const Ideal> family) {
  Mask acc = bit(l->bot());
  for (const Ideal& ideal : family) {
    require_home(l, ideal);
    Mask next = 0;
    for_each_member(acc, [&](std::size_t a) {
      for_each_member(ideal.members, [&](std::size_t b) { next |= bit(l->join(a, b)); });
    });
    acc = next;
  }
  return Ideal{l, acc};
}

SetLattice ideal_lattice(const LatticeRef& l) {
  std::vector<Mask> sets;
  std::vector<std::string> names;
  for (Mask s : enumerate_downsets(l->order())) {
    if (!is_ideal(*l, s)) continue;
    sets.push_back(s);
    const Mask top = l->order().maximal(s);
    if (cardinality(top) == 1)
      names.push_back("dn(" + l->name(static_cast<std::size_t>(std::countr_zero(top))) + ")");
    else
      names.push_back(subset_name(l->order().names(), s));
  }
  return inclusion_lattice(sets, names);
}

Ideal ideal_map_image(const LatticeHom& f, const Ideal& ideal) {
  require_home(f.source(), ideal);
  Mask out = 0;
  for_each_member(ideal.members, [&](std::size_t a) { out |= f.target()->downset(f(a)); });
  return Ideal{f.target(), out};
}

LatticeHom ideal_map(const LatticeHom& f) {
  const SetLattice from = ideal_lattice(f.source());
  const SetLattice to = ideal_lattice(f.target());
  std::vector<std::size_t> a(from.sets.size());
  for (std::size_t k = 0; k < a.size(); ++k)
    a[k] = to.element_of(ideal_map_image(f, Ideal{f.source(), from.sets[k]}).members);
  return LatticeHom(from.lattice, to.lattice, std::move(a));
}

std::vector<PrimeFilter> prime_filters(const LatticeRef& l) {
  std::vector<PrimeFilter> out;
  for (Mask s : enumerate_upsets(l->order()))
    if (is_prime_filter(*l, s)) out.push_back(PrimeFilter{l, s});
  return out;
}

std::vector<LatticeHom> homs_to_2(const LatticeRef& l) {
  // Monotone maps into 2 are exactly the characteristic maps of up-sets.
  std::vector<LatticeHom> out;
  const LatticeRef& two = two_lattice();
  for (Mask s : enumerate_upsets(l->order())) {
    std::vector<std::size_t> a(l->size());
    for (std::size_t x = 0; x < a.size(); ++x) a[x] = contains(s, x) ? 1 : 0;
    if (is_lattice_hom(*l, *two, a)) out.emplace_back(l, two, std::move(a));
  }
  return out;
}

Ideal monad_unit_down(const LatticeRef& l, std::size_t a) { return Ideal{l, l->downset(a)}; }

LatticeHom down_hom(const LatticeRef& l) {
  const SetLattice jl = ideal_lattice(l);
  std::vector<std::size_t> a(l->size());
  for (std::size_t x = 0; x < a.size(); ++x) a[x] = jl.element_of(l->downset(x));
  return LatticeHom(l, jl.lattice, std::move(a));
}

Ideal monad_mult_union(const LatticeRef& l, const Ideal& family) {
  const SetLattice jl = ideal_lattice(l);
  require_home(jl.lattice, family);
  if (!is_ideal(*jl.lattice, family.members)) throw ForeignIdeal("family is not an ideal of the ideal lattice");
  Mask out = 0;
  for_each_member(family.members, [&](std::size_t k) { out |= jl.sets[k]; });
  return Ideal{l, out};
}

LatticeHom union_hom(const LatticeRef& l) {
  const SetLattice jl = ideal_lattice(l);
  const SetLattice jjl = ideal_lattice(jl.lattice);
  std::vector<std::size_t> a(jjl.sets.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    Mask u = 0;
    for_each_member(jjl.sets[k], [&](std::size_t m) { u |= jl.sets[m]; });
    a[k] = jl.element_of(u);
  }
  return LatticeHom(jjl.lattice, jl.lattice, std::move(a));
}

LatticeHom frame_join_algebra(const LatticeRef& l) {
  const SetLattice jl = ideal_lattice(l);
  std::vector<std::size_t> a(jl.sets.size());
  for (std::size_t k = 0; k < a.size(); ++k) a[k] = l->join_of(jl.sets[k]);
  return LatticeHom(jl.lattice, l, std::move(a));
}

}  // namespace stonekit
