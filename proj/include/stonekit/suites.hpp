#ifndef STONEKIT_SUITES_HPP
#define STONEKIT_SUITES_HPP

// Law suites over the finite universes, one report line per instance and law.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "stonekit/universe.hpp"

namespace stonekit {

struct SuiteOptions {
  std::size_t max_points = 3;
  std::size_t max_lattice = 16;
  std::uint64_t seed = kDefaultSeed;
  std::size_t sample = 64;  // five-point spaces drawn when max_points is 5
};

struct SuiteLine {
  std::string universe;
  std::string law;
  bool pass = true;
  std::string witness;

  /// "universe law PASS" or "universe law FAIL witness".
  std::string format() const;
};

struct SuiteReport {
  std::vector<SuiteLine> lines;

  std::size_t failures() const;
  bool passed() const { return failures() == 0; }
  /// Lines with the given law id.
  std::vector<SuiteLine> with_law(std::string_view law) const;
};

/// Suites accepted by run_suite, in display order.
const std::vector<std::string>& suite_names();

/// Throws InvalidInput for an unknown suite name.
SuiteReport run_suite(std::string_view name, const SuiteOptions& options);

}  // namespace stonekit

#endif
