#pragma once

#include <stdexcept>
#include <string>

namespace brio {

/// Base of every error raised by the solver. `kind()` is the stable name used
/// in machine-readable error output.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "Error"; }
};

#define BRIO_DECLARE_ERROR(Name)                                   \
  class Name : public Error {                                      \
   public:                                                         \
    using Error::Error;                                            \
    const char* kind() const noexcept override { return #Name; }  \
  }

BRIO_DECLARE_ERROR(DomainError);
BRIO_DECLARE_ERROR(PreconditionError);
BRIO_DECLARE_ERROR(DegenerateJump);
BRIO_DECLARE_ERROR(StepFailure);
BRIO_DECLARE_ERROR(BracketFailure);
BRIO_DECLARE_ERROR(OrderingViolation);
BRIO_DECLARE_ERROR(QuadratureFailure);
BRIO_DECLARE_ERROR(CflViolation);
BRIO_DECLARE_ERROR(BlowUp);
BRIO_DECLARE_ERROR(ConfigError);

#undef BRIO_DECLARE_ERROR

}  // namespace brio
