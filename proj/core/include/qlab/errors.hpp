#pragma once

#include <stdexcept>
#include <string>

namespace qlab {

// Base of every library error. name() is the stable identifier surfaced by
// the CLI and recorded in verification reports.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* name() const noexcept { return "Error"; }
};

#define QLAB_DEFINE_ERROR(Name)                                  \
  class Name : public Error {                                    \
   public:                                                       \
    using Error::Error;                                          \
    const char* name() const noexcept override { return #Name; } \
  }

QLAB_DEFINE_ERROR(NonConvergence);
QLAB_DEFINE_ERROR(DomainError);
QLAB_DEFINE_ERROR(PoleError);
QLAB_DEFINE_ERROR(NegativeRadicand);
QLAB_DEFINE_ERROR(QuadratureFailure);
QLAB_DEFINE_ERROR(DimensionError);
QLAB_DEFINE_ERROR(NotDiagonal);
QLAB_DEFINE_ERROR(ConfigError);
QLAB_DEFINE_ERROR(UnknownFunction);
QLAB_DEFINE_ERROR(ArgumentError);

#undef QLAB_DEFINE_ERROR

}  // namespace qlab
