#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace levitanaka {

enum class ErrorCode {
  DimensionMismatch,
  NonIntegral,
  NoCharacteristicElement,
  NotUnique,
  LiftFailed,
  NilradicalUnsupported,
  InternalInvariant,
  DegenerateForm,
  NotFundamental,
  PreconditionFailed,
  CapReached,
  Admissibility,
  Kind,
  WordInvalid,
  NotTildeS,
  Malformed,
};

std::string_view error_code_name(ErrorCode code);

/// Every failure the library reports carries a stable code; messages are for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace levitanaka
