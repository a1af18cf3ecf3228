#ifndef STONEKIT_SPACE_HPP
#define STONEKIT_SPACE_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stonekit/bits.hpp"
#include "stonekit/lattice.hpp"

namespace stonekit {

/// Finite topological space given by its full family of open sets.
///
/// Points keep the order they were given in. Opens are stored deduplicated and
/// sorted by size, then by mask value.
class FinSpace {
 public:
  /// The empty space.
  FinSpace();

  /// Throws NotATopology when the family misses the empty or the full set,
  /// or is not closed under binary union and intersection.
  FinSpace(std::vector<std::string> points, std::vector<Mask> opens);

  /// Closes the generators under finite intersections and unions.
  static FinSpace generated_by(std::vector<std::string> points, const std::vector<Mask>& generators);

  std::size_t size() const { return points_.size(); }
  const std::string& name(std::size_t x) const { return points_[x]; }
  const std::vector<std::string>& names() const { return points_; }
  const std::vector<Mask>& opens() const { return opens_; }
  Mask all() const { return full_mask(size()); }
  bool is_open(Mask s) const;

  std::optional<std::size_t> index_of(std::string_view name) const;
  std::size_t at(std::string_view name) const;

  /// Smallest open containing x.
  Mask minimal_open(std::size_t x) const;
  /// Kuratowski closure: complement of the largest open disjoint from s.
  Mask closure(Mask s) const;
  /// Sets that are both open and closed.
  std::vector<Mask> clopens() const;

  friend bool operator==(const FinSpace&, const FinSpace&) = default;

 private:
  std::vector<std::string> points_;
  std::vector<Mask> opens_;
};

using SpaceRef = std::shared_ptr<const FinSpace>;

inline SpaceRef share(FinSpace x) { return std::make_shared<const FinSpace>(std::move(x)); }
inline bool same_space(const SpaceRef& a, const SpaceRef& b) { return a == b || (a && b && *a == *b); }

/// Map whose preimages of opens are open.
class ContinuousMap {
 public:
  /// Throws NotContinuous naming an open with a non-open preimage.
  ContinuousMap(SpaceRef source, SpaceRef target, std::vector<std::size_t> assignment);

  static ContinuousMap identity(const SpaceRef& x);

  const SpaceRef& source() const { return source_; }
  const SpaceRef& target() const { return target_; }
  std::size_t operator()(std::size_t x) const { return assignment_[x]; }
  const std::vector<std::size_t>& assignment() const { return assignment_; }

  Mask image(Mask s) const;
  Mask preimage(Mask s) const;
  bool bijective() const;

  friend bool operator==(const ContinuousMap& f, const ContinuousMap& g) {
    return f.assignment_ == g.assignment_ && same_space(f.source_, g.source_) && same_space(f.target_, g.target_);
  }

 private:
  SpaceRef source_;
  SpaceRef target_;
  std::vector<std::size_t> assignment_;
};

bool is_continuous(const FinSpace& source, const FinSpace& target, const std::vector<std::size_t>& assignment);

/// g after f. Throws TypeMismatch unless f.target is g.source.
ContinuousMap compose(const ContinuousMap& g, const ContinuousMap& f);
/// Inverse of a homeomorphism.
std::optional<ContinuousMap> inverse(const ContinuousMap& f);

/// Every continuous map source -> target (|target|^|source| candidates).
std::vector<ContinuousMap> enumerate_continuous_maps(const SpaceRef& source, const SpaceRef& target);

/// Lattice of open sets under inclusion; elements named by their points.
SetLattice open_set_frame(const FinSpace& x);
/// Preimage along f as a homomorphism from the opens of the target to the
/// opens of the source.
LatticeHom preimage_hom(const ContinuousMap& f);

/// Bijection x -> y carrying the open family of x onto that of y, if any.
std::optional<std::vector<std::size_t>> find_homeomorphism(const FinSpace& x, const FinSpace& y);

}  // namespace stonekit

#endif
