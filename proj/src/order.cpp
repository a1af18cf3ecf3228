#include "stonekit/order.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

#include "stonekit/error.hpp"
#include "stonekit/lattice.hpp"

namespace stonekit {

namespace {

void check_carrier_size(std::size_t n) {
  if (n > kMaxCarrier) throw InvalidInput("carrier has " + std::to_string(n) + " elements; at most 64 supported");
}

}  // namespace

FinPoset FinPoset::from_relation(std::vector<std::string> names, std::vector<Mask> up,
                                 std::vector<std::size_t>* original) {
  const std::size_t n = names.size();
  check_carrier_size(n);
  if (up.size() != n) throw InvalidInput("relation size does not match element count");
  {
    std::vector<std::string> sorted = names;
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end()) throw InvalidInput("duplicate element '" + *dup + "'");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!contains(up[i], i)) throw InvalidInput("relation is not reflexive at '" + names[i] + "'");
    if (!is_subset(up[i], full_mask(n))) throw InvalidInput("relation mentions undeclared elements");
    for_each_member(up[i], [&](std::size_t j) {
      if (!is_subset(up[j], up[i]))
        throw InvalidInput("relation is not transitive at '" + names[i] + "' <= '" + names[j] + "'");
      if (j != i && contains(up[j], i))
        throw CycleError("'" + names[i] + "' <= '" + names[j] + "' <= '" + names[i] + "'");
    });
  }

  // Linear extension: repeatedly emit the minimal remaining element with the smallest name.
  std::vector<std::size_t> order;
  order.reserve(n);
  Mask remaining = full_mask(n);
  while (remaining != 0) {
    std::size_t best = n;
    for_each_member(remaining, [&](std::size_t i) {
      bool minimal = true;
      for_each_member(remaining, [&](std::size_t j) {
        if (j != i && contains(up[j], i)) minimal = false;
      });
      if (minimal && (best == n || names[i] < names[best])) best = i;
    });
    order.push_back(best);
    remaining &= ~bit(best);
  }

  std::vector<std::size_t> position(n);
  for (std::size_t k = 0; k < n; ++k) position[order[k]] = k;

  FinPoset p;
  p.names_.resize(n);
  p.up_.assign(n, 0);
  p.down_.assign(n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t i = order[k];
    p.names_[k] = std::move(names[i]);
    for_each_member(up[i], [&](std::size_t j) {
      p.up_[k] |= bit(position[j]);
      p.down_[position[j]] |= bit(k);
    });
  }
  if (original) *original = std::move(order);
  return p;
}

std::optional<std::size_t> FinPoset::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

std::size_t FinPoset::at(std::string_view name) const {
  if (auto i = index_of(name)) return *i;
  throw InvalidInput("unknown element '" + std::string(name) + "'");
}

std::size_t FinPoset::pair_count() const {
  std::size_t total = 0;
  for (Mask m : up_) total += cardinality(m);
  return total;
}

std::vector<std::pair<std::size_t, std::size_t>> FinPoset::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < size(); ++i) {
    const Mask strictly_above = up_[i] & ~bit(i);
    for_each_member(minimal(strictly_above), [&](std::size_t j) { out.emplace_back(i, j); });
  }
  return out;
}

Mask FinPoset::minimal(Mask s) const {
  Mask out = 0;
  for_each_member(s, [&](std::size_t i) {
    if ((down_[i] & s) == bit(i)) out |= bit(i);
  });
  return out;
}

Mask FinPoset::maximal(Mask s) const {
  Mask out = 0;
  for_each_member(s, [&](std::size_t i) {
    if ((up_[i] & s) == bit(i)) out |= bit(i);
  });
  return out;
}

bool FinPoset::is_downset(Mask s) const { return down_closure(s) == s; }
bool FinPoset::is_upset(Mask s) const { return up_closure(s) == s; }

Mask FinPoset::down_closure(Mask s) const {
  Mask out = 0;
  for_each_member(s, [&](std::size_t i) { out |= down_[i]; });
  return out;
}

Mask FinPoset::up_closure(Mask s) const {
  Mask out = 0;
  for_each_member(s, [&](std::size_t i) { out |= up_[i]; });
  return out;
}

FinPoset FinPoset::restrict_to(Mask s) const {
  std::vector<std::size_t> keep;
  for_each_member(s, [&](std::size_t i) { keep.push_back(i); });
  std::vector<std::string> names;
  std::vector<Mask> up(keep.size(), 0);
  for (std::size_t a = 0; a < keep.size(); ++a) {
    names.push_back(names_[keep[a]]);
    for (std::size_t b = 0; b < keep.size(); ++b)
      if (leq(keep[a], keep[b])) up[a] |= bit(b);
  }
  return from_relation(std::move(names), std::move(up));
}

MonotoneMap::MonotoneMap(FinPoset source, FinPoset target, std::vector<std::size_t> assignment)
    : source_(std::move(source)), target_(std::move(target)), assignment_(std::move(assignment)) {
  if (assignment_.size() != source_.size()) throw InvalidInput("monotone map is not total");
  for (std::size_t v : assignment_)
    if (v >= target_.size()) throw InvalidInput("monotone map leaves its target");
  for (std::size_t x = 0; x < source_.size(); ++x)
    for_each_member(source_.upset(x), [&](std::size_t y) {
      if (!target_.leq(assignment_[x], assignment_[y]))
        throw InvalidInput("map is not monotone at '" + source_.name(x) + "' <= '" + source_.name(y) + "'");
    });
}

FinPoset order_closure(const std::vector<std::string>& elements,
                       const std::vector<std::pair<std::string, std::string>>& pairs) {
  const std::size_t n = elements.size();
  check_carrier_size(n);
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i)
    if (!index.emplace(elements[i], i).second) throw InvalidInput("duplicate element '" + elements[i] + "'");

  std::vector<Mask> up(n);
  for (std::size_t i = 0; i < n; ++i) up[i] = bit(i);
  for (const auto& [lo, hi] : pairs) {
    auto a = index.find(lo);
    auto b = index.find(hi);
    if (a == index.end()) throw InvalidInput("pair names undeclared element '" + lo + "'");
    if (b == index.end()) throw InvalidInput("pair names undeclared element '" + hi + "'");
    up[a->second] |= bit(b->second);
  }
  // Warshall on bit rows.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (contains(up[i], k)) up[i] |= up[k];
  for (std::size_t i = 0; i < n; ++i)
    for_each_member(up[i], [&](std::size_t j) {
      if (j != i && contains(up[j], i))
        throw CycleError("'" + elements[i] + "' <= '" + elements[j] + "' <= '" + elements[i] + "'");
    });
  return FinPoset::from_relation(elements, std::move(up));
}

std::vector<Mask> enumerate_downsets(const FinPoset& p) {
  // Decide elements in canonical (linear extension) order: an element may
  // join only if everything strictly below it is already in.
  std::vector<Mask> out;
  const std::size_t n = p.size();
  std::function<void(std::size_t, Mask)> go = [&](std::size_t i, Mask s) {
    if (i == n) {
      out.push_back(s);
      return;
    }
    go(i + 1, s);
    if (is_subset(p.downset(i) & ~bit(i), s)) go(i + 1, s | bit(i));
  };
  go(0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Mask> enumerate_upsets(const FinPoset& p) {
  std::vector<Mask> out;
  const std::size_t n = p.size();
  std::function<void(std::size_t, Mask)> go = [&](std::size_t k, Mask s) {
    if (k == n) {
      out.push_back(s);
      return;
    }
    const std::size_t i = n - 1 - k;
    go(k + 1, s);
    if (is_subset(p.upset(i) & ~bit(i), s)) go(k + 1, s | bit(i));
  };
  go(0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

DistLattice downset_lattice(const FinPoset& p) {
  std::vector<Mask> sets = enumerate_downsets(p);
  std::vector<std::string> names;
  names.reserve(sets.size());
  for (Mask s : sets) names.push_back(subset_name(p.names(), s));
  return *inclusion_lattice(sets, names).lattice;
}

FinPoset join_irreducibles(const DistLattice& l) {
  Mask keep = 0;
  for (std::size_t x = 0; x < l.size(); ++x) {
    if (x == l.bot()) continue;
    const Mask strictly_below = l.downset(x) & ~bit(x);
    if (cardinality(l.order().maximal(strictly_below)) == 1) keep |= bit(x);
  }
  return l.order().restrict_to(keep);
}

std::optional<std::vector<std::size_t>> find_poset_isomorphism(const FinPoset& a, const FinPoset& b) {
  const std::size_t n = a.size();
  if (b.size() != n || a.pair_count() != b.pair_count()) return std::nullopt;
  auto signature = [](const FinPoset& p, std::size_t i) {
    return std::pair{cardinality(p.upset(i)), cardinality(p.downset(i))};
  };
  std::vector<std::size_t> image(n);
  Mask used = 0;
  std::function<bool(std::size_t)> go = [&](std::size_t i) {
    if (i == n) return true;
    for (std::size_t j = 0; j < n; ++j) {
      if (contains(used, j) || signature(a, i) != signature(b, j)) continue;
      bool ok = true;
      for (std::size_t k = 0; k < i && ok; ++k)
        ok = a.leq(k, i) == b.leq(image[k], j) && a.leq(i, k) == b.leq(j, image[k]);
      if (!ok) continue;
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

std::string subset_name(const std::vector<std::string>& names, Mask s) {
  std::string out = "{";
  bool first = true;
  for_each_member(s, [&](std::size_t i) {
    if (!first) out += ',';
    out += names[i];
    first = false;
  });
  out += '}';
  return out;
}

}  // namespace stonekit
