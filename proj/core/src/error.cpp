#include "soficonv/error.hpp"

namespace soficonv {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::DescriptorMismatch: return "DESCRIPTOR_MISMATCH";
    case ErrorCode::InvalidDescriptor: return "INVALID_DESCRIPTOR";
    case ErrorCode::EmptyWord: return "EMPTY_WORD";
    case ErrorCode::LetterOutOfRange: return "LETTER_OUT_OF_RANGE";
    case ErrorCode::UnknownLetter: return "UNKNOWN_LETTER";
    case ErrorCode::ConditionViolated: return "CONDITION_VIOLATED";
    case ErrorCode::NotPositive: return "NOT_POSITIVE";
    case ErrorCode::NotStochastic: return "NOT_STOCHASTIC";
    case ErrorCode::Reducible: return "REDUCIBLE";
    case ErrorCode::KernelDimension: return "KERNEL_DIMENSION";
    case ErrorCode::NonUniform: return "NON_UNIFORM";
    case ErrorCode::NotFiniteRenyi: return "NOT_FINITE_RENYI";
    case ErrorCode::NotFiniteExpansion: return "NOT_FINITE_EXPANSION";
    case ErrorCode::NotWParseable: return "NOT_W_PARSEABLE";
    case ErrorCode::NonPositiveValue: return "NONPOSITIVE_VALUE";
    case ErrorCode::NotMonotone: return "NOT_MONOTONE";
    case ErrorCode::NoCutPoint: return "NO_CUT_POINT";
    case ErrorCode::InsufficientBits: return "INSUFFICIENT_BITS";
    case ErrorCode::StateCapExceeded: return "STATE_CAP_EXCEEDED";
    case ErrorCode::ParseError: return "PARSE_ERROR";
  }
  return "UNKNOWN";
}

bool is_resource_error(ErrorCode code) {
  return code == ErrorCode::StateCapExceeded;
}

}  // namespace soficonv
