#pragma once

#include <stdexcept>
#include <string>

namespace symtop {

enum class ErrorCode {
  NotAntisymmetric,
  TooFarFromSO3,
  NotARotation,
  DimensionMismatch,
  InvariantViolation,
  NonFinite,
  NotSameLevel,
  ZeroNu,
  NotUnit,
  NotTangent,
  InvalidArgument,
};

const char* to_string(ErrorCode code) noexcept;

/// Single exception type for the library; the code identifies which
/// precondition failed.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace symtop
