#pragma once

#include <stdexcept>
#include <string>

namespace kzlab {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define KZLAB_DEFINE_ERROR(Name)                        \
  class Name : public Error {                           \
   public:                                              \
    explicit Name(const std::string& what)              \
        : Error(std::string(#Name ": ") + what) {}      \
  };

KZLAB_DEFINE_ERROR(InvalidArgument)
KZLAB_DEFINE_ERROR(DivisionByZero)
KZLAB_DEFINE_ERROR(NonAbsoluteCycle)
KZLAB_DEFINE_ERROR(DegenerateAngle)
KZLAB_DEFINE_ERROR(VertexNotFound)
KZLAB_DEFINE_ERROR(InvalidIndex)
KZLAB_DEFINE_ERROR(DegenerateConfiguration)
KZLAB_DEFINE_ERROR(InexactInput)
KZLAB_DEFINE_ERROR(NumericalOverflow)
KZLAB_DEFINE_ERROR(InvalidGrid)
KZLAB_DEFINE_ERROR(IoFailure)
KZLAB_DEFINE_ERROR(UnsupportedFormat)

#undef KZLAB_DEFINE_ERROR

}  // namespace kzlab
