#pragma once

#include <stdexcept>
#include <string>

namespace prf {

// Base of everything the library throws on a violated precondition.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define PRF_DEFINE_ERROR(Name)           \
  class Name : public Error {            \
   public:                               \
    using Error::Error;                  \
  }

// field
PRF_DEFINE_ERROR(NonPrimePError);
PRF_DEFINE_ERROR(NonPrimitivePolyError);
PRF_DEFINE_ERROR(DegreeMismatchError);
PRF_DEFINE_ERROR(FieldTooLargeError);
PRF_DEFINE_ERROR(DivisionByZeroError);

// poly / ratfunc
PRF_DEFINE_ERROR(ZeroScaleError);
PRF_DEFINE_ERROR(BothZeroError);
PRF_DEFINE_ERROR(ZeroDenominatorError);
PRF_DEFINE_ERROR(ZeroNumeratorError);
PRF_DEFINE_ERROR(SizeMismatchError);
PRF_DEFINE_ERROR(ParseError);

// normalize
PRF_DEFINE_ERROR(KindMismatchError);
PRF_DEFINE_ERROR(ZeroScalarError);
PRF_DEFINE_ERROR(NoRepresentativeError);

// census / bounds
PRF_DEFINE_ERROR(BudgetExceededError);
PRF_DEFINE_ERROR(CheckpointMismatchError);
PRF_DEFINE_ERROR(NonDivisibleError);
PRF_DEFINE_ERROR(MalformedRowError);
PRF_DEFINE_ERROR(IoError);

#undef PRF_DEFINE_ERROR

// Raised when a bound needs counts that no provider could supply. The
// missing (v,u) pairs are kept so callers can report them.
class MissingCountError : public Error {
 public:
  MissingCountError(std::string what, std::string missing)
      : Error(std::move(what)), missing_(std::move(missing)) {}
  const std::string& missing() const noexcept { return missing_; }

 private:
  std::string missing_;
};

}  // namespace prf
