#include "ospkw/errors.hpp"

namespace ospkw {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::InvalidSequence: return "InvalidSequence";
    case ErrorCode::InvalidAlgebra: return "InvalidAlgebra";
    case ErrorCode::NotSimpleIsotropic: return "NotSimpleIsotropic";
    case ErrorCode::FamilyMismatch: return "FamilyMismatch";
    case ErrorCode::HookViolation: return "HookViolation";
    case ErrorCode::UnsupportedCase: return "UnsupportedCase";
    case ErrorCode::NotTame: return "NotTame";
    case ErrorCode::WrongRegime: return "WrongRegime";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::RankTooLarge: return "RankTooLarge";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::JDivisibilityFailure: return "JDivisibilityFailure";
    case ErrorCode::InternalError: return "InternalError";
  }
  return "Unknown";
}

bool is_internal_fault(ErrorCode code) {
  return code == ErrorCode::NotDivisible || code == ErrorCode::JDivisibilityFailure ||
         code == ErrorCode::InternalError;
}

}  // namespace ospkw
