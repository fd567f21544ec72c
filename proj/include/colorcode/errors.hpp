#pragma once

#include <stdexcept>
#include <string>

namespace colorcode {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define COLORCODE_DEFINE_ERROR(Name)                              \
  class Name : public Error {                                     \
   public:                                                        \
    explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
  }

COLORCODE_DEFINE_ERROR(SizeConstraintViolation);
COLORCODE_DEFINE_ERROR(IndexOutOfRange);
COLORCODE_DEFINE_ERROR(DimensionMismatch);
COLORCODE_DEFINE_ERROR(InvalidLattice);
COLORCODE_DEFINE_ERROR(NoPath);
COLORCODE_DEFINE_ERROR(ColorMismatch);
COLORCODE_DEFINE_ERROR(NotEnclosable);
COLORCODE_DEFINE_ERROR(UnrealizableSignature);
COLORCODE_DEFINE_ERROR(GeometryUnrealizable);
COLORCODE_DEFINE_ERROR(TooLarge);
COLORCODE_DEFINE_ERROR(ParseError);
COLORCODE_DEFINE_ERROR(InvalidRegion);

#undef COLORCODE_DEFINE_ERROR

}  // namespace colorcode
