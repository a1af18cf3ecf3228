#ifndef STONEKIT_ERROR_HPP
#define STONEKIT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace stonekit {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define STONEKIT_DEFINE_ERROR(Name)        \
  class Name : public Error {              \
   public:                                 \
    using Error::Error;                    \
  }

STONEKIT_DEFINE_ERROR(InvalidInput);
STONEKIT_DEFINE_ERROR(CycleError);
STONEKIT_DEFINE_ERROR(NotALattice);
STONEKIT_DEFINE_ERROR(NotDistributive);
STONEKIT_DEFINE_ERROR(NotAHomomorphism);
STONEKIT_DEFINE_ERROR(ForeignIdeal);
STONEKIT_DEFINE_ERROR(ForeignFilter);
STONEKIT_DEFINE_ERROR(NotATopology);
STONEKIT_DEFINE_ERROR(NotContinuous);
STONEKIT_DEFINE_ERROR(NoCanonicalAlgebra);
STONEKIT_DEFINE_ERROR(TypeMismatch);
STONEKIT_DEFINE_ERROR(UniverseMismatch);
STONEKIT_DEFINE_ERROR(NotAnAlgebra);
STONEKIT_DEFINE_ERROR(CounitNotIso);
STONEKIT_DEFINE_ERROR(HypothesisFailed);
STONEKIT_DEFINE_ERROR(ParseError);
STONEKIT_DEFINE_ERROR(BudgetExceeded);

#undef STONEKIT_DEFINE_ERROR

}  // namespace stonekit

#endif
