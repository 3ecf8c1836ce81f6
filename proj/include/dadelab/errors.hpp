#pragma once

#include <stdexcept>
#include <string>

namespace dadelab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define DADELAB_DEFINE_ERROR(Name)         \
  class Name : public Error {              \
   public:                                 \
    using Error::Error;                    \
  }

DADELAB_DEFINE_ERROR(InvalidArgument);
DADELAB_DEFINE_ERROR(RingMismatch);
DADELAB_DEFINE_ERROR(GroupMismatch);
DADELAB_DEFINE_ERROR(NonUnit);
DADELAB_DEFINE_ERROR(ParseError);
DADELAB_DEFINE_ERROR(ValidationError);
DADELAB_DEFINE_ERROR(DeterminantNotRootOfUnity);
DADELAB_DEFINE_ERROR(NotIndecomposable);
DADELAB_DEFINE_ERROR(NotCapped);
DADELAB_DEFINE_ERROR(CertificationFailed);
DADELAB_DEFINE_ERROR(PrecisionFailure);
DADELAB_DEFINE_ERROR(BoundExceeded);
DADELAB_DEFINE_ERROR(NotEndoPermutation);
DADELAB_DEFINE_ERROR(NotStronglyCapped);
DADELAB_DEFINE_ERROR(NotALift);
DADELAB_DEFINE_ERROR(NonInvertibleDimension);
DADELAB_DEFINE_ERROR(InsufficientRoots);
DADELAB_DEFINE_ERROR(InternalInvariantViolation);

#undef DADELAB_DEFINE_ERROR

}  // namespace dadelab
