#ifndef STONEKIT_UNIVERSE_HPP
#define STONEKIT_UNIVERSE_HPP

// Finite universes of test structures.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "stonekit/lattice.hpp"
#include "stonekit/order.hpp"
#include "stonekit/space.hpp"

namespace stonekit {

inline constexpr std::uint64_t kDefaultSeed = 20240517;

/// Posets on n elements, one per isomorphism class; elements are named 0..n-1.
std::vector<FinPoset> posets_up_to_iso(std::size_t n);

/// Every preorder on n labeled points, as up-set rows.
std::vector<std::vector<Mask>> labeled_preorders(std::size_t n);

/// Every topology on the points 0..n-1, one per preorder (opens = up-sets).
std::vector<SpaceRef> labeled_topologies(std::size_t n);

/// Every topology on n <= 4 points found by testing each family of subsets
/// directly; exponential in 2^n and meant as an oracle.
std::vector<SpaceRef> topologies_by_families(std::size_t n);

struct NamedSpace {
  std::string id;
  SpaceRef space;
};

struct NamedLattice {
  std::string id;
  LatticeRef lattice;
};

/// All topologies on 0..max_points points. Five points are sampled: `sample`
/// of the 6942 are drawn with the given seed.
std::vector<NamedSpace> space_universe(std::size_t max_points, std::uint64_t seed = kDefaultSeed,
                                       std::size_t sample = 64);

/// Downset lattices of the posets with at most four elements, keeping those
/// with at most max_size elements.
std::vector<NamedLattice> lattice_universe(std::size_t max_size = 16);

}  // namespace stonekit

#endif
