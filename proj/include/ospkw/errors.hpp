#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ospkw {

enum class ErrorCode {
  RankMismatch,
  InvalidSequence,
  InvalidAlgebra,
  NotSimpleIsotropic,
  FamilyMismatch,
  HookViolation,
  UnsupportedCase,
  NotTame,
  WrongRegime,
  ParseError,
  RankTooLarge,
  NotDivisible,
  JDivisibilityFailure,
  InternalError,
};

std::string_view error_code_name(ErrorCode code);

// Internal faults signal a bug or a violated mathematical identity, as
// opposed to bad user input.
bool is_internal_fault(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace ospkw
