#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace skewmorph {

enum class ErrorCode {
  kNotAUnit,
  kNoSuchElement,
  kNotAPermutation,
  kIdentityNotFixed,
  kNotSkew,
  kNotCompatible,
  kNotPreserved,
  kNotSkewPower,
  kNotProper,
  kPreconditionViolated,
  kBadParameters,
  kConditionViolated,
  kIncompleteCensus,
  kBudgetExceeded,
  kOracleLimit,
  kIoFailure,
  kFormatError,
  kInternal,
};

std::string_view to_string(ErrorCode code);

/// The single exception type thrown by the library; `code()` identifies the failure.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

}  // namespace skewmorph
