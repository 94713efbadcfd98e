#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace soficonv {

/// Machine-readable failure categories shared by every module.
enum class ErrorCode {
  InvalidArgument,
  DescriptorMismatch,
  InvalidDescriptor,
  EmptyWord,
  LetterOutOfRange,
  UnknownLetter,
  ConditionViolated,  // (sum R) C = 1 or (sum M) C = C fails
  NotPositive,
  NotStochastic,
  Reducible,
  KernelDimension,
  NonUniform,
  NotFiniteRenyi,
  NotFiniteExpansion,
  NotWParseable,
  NonPositiveValue,
  NotMonotone,
  NoCutPoint,
  InsufficientBits,
  StateCapExceeded,
  ParseError,
};

/// Stable upper-case identifier used on stderr and in JSON error objects.
std::string_view error_code_name(ErrorCode code);

/// True for codes that signal an exhausted resource cap rather than bad input.
bool is_resource_error(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace soficonv
