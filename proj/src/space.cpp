#include "stonekit/space.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "stonekit/error.hpp"
#include "stonekit/order.hpp"

namespace stonekit {

namespace {

void sort_opens(std::vector<Mask>& opens) {
  std::sort(opens.begin(), opens.end(), [](Mask a, Mask b) {
    if (cardinality(a) != cardinality(b)) return cardinality(a) < cardinality(b);
    return a < b;
  });
  opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
}

}  // namespace

FinSpace::FinSpace() : opens_{0} {}

FinSpace::FinSpace(std::vector<std::string> points, std::vector<Mask> opens)
    : points_(std::move(points)), opens_(std::move(opens)) {
  if (points_.size() > kMaxCarrier) throw InvalidInput("spaces are limited to 64 points");
  {
    std::vector<std::string> sorted = points_;
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end()) throw InvalidInput("duplicate point '" + *dup + "'");
  }
  sort_opens(opens_);
  const Mask everything = all();
  for (Mask u : opens_)
    if (!is_subset(u, everything)) throw NotATopology("open set mentions undeclared points");
  if (!is_open(0)) throw NotATopology("the empty set is not open");
  if (!is_open(everything)) throw NotATopology("the whole space is not open");
  for (Mask u : opens_)
    for (Mask v : opens_) {
      if (!is_open(u | v))
        throw NotATopology("union of " + subset_name(points_, u) + " and " + subset_name(points_, v) + " is not open");
      if (!is_open(u & v))
        throw NotATopology("intersection of " + subset_name(points_, u) + " and " + subset_name(points_, v) +
                           " is not open");
    }
}

FinSpace FinSpace::generated_by(std::vector<std::string> points, const std::vector<Mask>& generators) {
  const Mask everything = full_mask(points.size());
  std::set<Mask> family(generators.begin(), generators.end());
  family.insert(0);
  family.insert(everything);
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<Mask> snapshot(family.begin(), family.end());
    for (Mask u : snapshot)
      for (Mask v : snapshot) {
        grew |= family.insert(u & v).second;
        grew |= family.insert(u | v).second;
      }
  }
  return FinSpace(std::move(points), std::vector<Mask>(family.begin(), family.end()));
}

bool FinSpace::is_open(Mask s) const {
  return std::binary_search(opens_.begin(), opens_.end(), s, [](Mask a, Mask b) {
    if (cardinality(a) != cardinality(b)) return cardinality(a) < cardinality(b);
    return a < b;
  });
}

std::optional<std::size_t> FinSpace::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < points_.size(); ++i)
    if (points_[i] == name) return i;
  return std::nullopt;
}

std::size_t FinSpace::at(std::string_view name) const {
  if (auto i = index_of(name)) return *i;
  throw InvalidInput("unknown point '" + std::string(name) + "'");
}

Mask FinSpace::minimal_open(std::size_t x) const {
  Mask out = all();
  for (Mask u : opens_)
    if (contains(u, x)) out &= u;
  return out;
}

Mask FinSpace::closure(Mask s) const {
  Mask disjoint = 0;
  for (Mask u : opens_)
    if ((u & s) == 0) disjoint |= u;
  return all() & ~disjoint;
}

std::vector<Mask> FinSpace::clopens() const {
  std::vector<Mask> out;
  for (Mask u : opens_)
    if (is_open(all() & ~u)) out.push_back(u);
  return out;
}

// ---------------------------------------------------------------------------

bool is_continuous(const FinSpace& source, const FinSpace& target, const std::vector<std::size_t>& a) {
  if (a.size() != source.size()) return false;
  for (std::size_t v : a)
    if (v >= target.size()) return false;
  for (Mask v : target.opens()) {
    Mask pre = 0;
    for (std::size_t x = 0; x < a.size(); ++x)
      if (contains(v, a[x])) pre |= bit(x);
    if (!source.is_open(pre)) return false;
  }
  return true;
}

ContinuousMap::ContinuousMap(SpaceRef source, SpaceRef target, std::vector<std::size_t> assignment)
    : source_(std::move(source)), target_(std::move(target)), assignment_(std::move(assignment)) {
  if (assignment_.size() != source_->size()) throw NotContinuous("assignment is not total");
  for (std::size_t v : assignment_)
    if (v >= target_->size()) throw NotContinuous("assignment leaves the target");
  for (Mask v : target_->opens())
    if (!source_->is_open(preimage(v)))
      throw NotContinuous("preimage of open " + subset_name(target_->names(), v) + " is not open");
}

ContinuousMap ContinuousMap::identity(const SpaceRef& x) {
  std::vector<std::size_t> a(x->size());
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = i;
  return ContinuousMap(x, x, std::move(a));
}

Mask ContinuousMap::image(Mask s) const {
  Mask out = 0;
  for_each_member(s, [&](std::size_t x) { out |= bit(assignment_[x]); });
  return out;
}

Mask ContinuousMap::preimage(Mask s) const {
  Mask out = 0;
  for (std::size_t x = 0; x < assignment_.size(); ++x)
    if (contains(s, assignment_[x])) out |= bit(x);
  return out;
}

bool ContinuousMap::bijective() const {
  return assignment_.size() == target_->size() && image(source_->all()) == target_->all();
}

ContinuousMap compose(const ContinuousMap& g, const ContinuousMap& f) {
  if (!same_space(f.target(), g.source())) throw TypeMismatch("continuous maps are not composable");
  std::vector<std::size_t> a(f.source()->size());
  for (std::size_t x = 0; x < a.size(); ++x) a[x] = g(f(x));
  return ContinuousMap(f.source(), g.target(), std::move(a));
}

std::optional<ContinuousMap> inverse(const ContinuousMap& f) {
  if (!f.bijective()) return std::nullopt;
  std::vector<std::size_t> a(f.target()->size());
  for (std::size_t x = 0; x < f.assignment().size(); ++x) a[f(x)] = x;
  if (!is_continuous(*f.target(), *f.source(), a)) return std::nullopt;
  return ContinuousMap(f.target(), f.source(), std::move(a));
}

std::vector<ContinuousMap> enumerate_continuous_maps(const SpaceRef& source, const SpaceRef& target) {
  std::vector<ContinuousMap> out;
  const std::size_t n = source->size();
  const std::size_t m = target->size();
  if (n > 0 && m == 0) return out;
  std::vector<std::size_t> a(n, 0);
  while (true) {
    if (is_continuous(*source, *target, a)) out.emplace_back(source, target, a);
    std::size_t i = 0;
    while (i < n && ++a[i] == m) a[i++] = 0;
    if (i == n) break;
  }
  return out;
}

SetLattice open_set_frame(const FinSpace& x) {
  std::vector<std::string> names;
  names.reserve(x.opens().size());
  for (Mask u : x.opens()) names.push_back(subset_name(x.names(), u));
  return inclusion_lattice(x.opens(), names);
}

LatticeHom preimage_hom(const ContinuousMap& f) {
  const SetLattice from = open_set_frame(*f.target());
  const SetLattice to = open_set_frame(*f.source());
  std::vector<std::size_t> a(from.sets.size());
  for (std::size_t k = 0; k < a.size(); ++k) a[k] = to.element_of(f.preimage(from.sets[k]));
  return LatticeHom(from.lattice, to.lattice, std::move(a));
}

std::optional<std::vector<std::size_t>> find_homeomorphism(const FinSpace& x, const FinSpace& y) {
  const std::size_t n = x.size();
  if (y.size() != n || x.opens().size() != y.opens().size()) return std::nullopt;
  // Points are matched by the size of their smallest neighbourhood and the
  // number of opens containing them; opens are compared once all are placed.
  auto signature = [](const FinSpace& s, std::size_t p) {
    std::size_t count = 0;
    for (Mask u : s.opens()) count += contains(u, p) ? 1 : 0;
    return std::pair{cardinality(s.minimal_open(p)), count};
  };
  std::vector<std::size_t> image(n);
  Mask used = 0;
  std::function<bool(std::size_t)> go = [&](std::size_t i) {
    if (i == n) {
      for (Mask u : x.opens()) {
        Mask v = 0;
        for_each_member(u, [&](std::size_t p) { v |= bit(image[p]); });
        if (!y.is_open(v)) return false;
      }
      return true;
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (contains(used, j) || signature(x, i) != signature(y, j)) continue;
      image[i] = j;
      used |= bit(j);
      if (go(i + 1)) return true;
      used &= ~bit(j);
    }
    return false;
  };
  if (!go(0)) return std::nullopt;
  return image;
}

}  // namespace stonekit
