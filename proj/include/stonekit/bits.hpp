#ifndef STONEKIT_BITS_HPP
#define STONEKIT_BITS_HPP

#include <bit>
#include <cstddef>
#include <cstdint>

namespace stonekit {

/// A subset of a carrier of at most 64 elements, bit i standing for element i.
using Mask = std::uint64_t;

inline constexpr std::size_t kMaxCarrier = 64;

constexpr Mask bit(std::size_t i) { return Mask{1} << i; }

constexpr Mask full_mask(std::size_t n) { return n >= 64 ? ~Mask{0} : bit(n) - 1; }

constexpr bool contains(Mask s, std::size_t i) { return (s >> i) & 1U; }

constexpr bool is_subset(Mask a, Mask b) { return (a & ~b) == 0; }

constexpr std::size_t cardinality(Mask s) { return static_cast<std::size_t>(std::popcount(s)); }

/// Calls f(i) for every member i of s, in increasing order.
template <class F>
constexpr void for_each_member(Mask s, F&& f) {
  while (s != 0) {
    f(static_cast<std::size_t>(std::countr_zero(s)));
    s &= s - 1;
  }
}

/// Calls f(sub) for every subset of s, starting with s itself and ending with 0.
template <class F>
constexpr void for_each_submask(Mask s, F&& f) {
  Mask sub = s;
  while (true) {
    f(sub);
    if (sub == 0) break;
    sub = (sub - 1) & s;
  }
}

}  // namespace stonekit

#endif
