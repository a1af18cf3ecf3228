#ifndef STONEKIT_VERDICT_HPP
#define STONEKIT_VERDICT_HPP

#include <string>
#include <utility>

namespace stonekit {

/// Outcome of a check: pass, or fail with a human-readable witness.
struct Verdict {
  bool pass = true;
  std::string witness;

  explicit operator bool() const { return pass; }
  static Verdict ok() { return Verdict{}; }
  static Verdict fail(std::string why) { return Verdict{false, std::move(why)}; }
};

}  // namespace stonekit

#endif
