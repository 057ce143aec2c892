#include "symtop/error.hpp"

namespace symtop {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotAntisymmetric: return "NotAntisymmetric";
    case ErrorCode::TooFarFromSO3: return "TooFarFromSO3";
    case ErrorCode::NotARotation: return "NotARotation";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::NotSameLevel: return "NotSameLevel";
    case ErrorCode::ZeroNu: return "ZeroNu";
    case ErrorCode::NotUnit: return "NotUnit";
    case ErrorCode::NotTangent: return "NotTangent";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace symtop
