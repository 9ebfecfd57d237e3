#include "twobridge/error.hpp"

namespace twobridge {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEvenDenominator: return "even-denominator";
    case ErrorCode::kDenominatorTooSmall: return "denominator-too-small";
    case ErrorCode::kNotCoprime: return "not-coprime";
    case ErrorCode::kZeroResidue: return "zero-residue";
    case ErrorCode::kMalformedText: return "malformed-text";
    case ErrorCode::kZeroEntry: return "zero-entry";
    case ErrorCode::kOddEntry: return "odd-entry";
    case ErrorCode::kOddLength: return "odd-length";
    case ErrorCode::kDivisionByZero: return "division-by-zero";
    case ErrorCode::kOverflow: return "overflow";
    case ErrorCode::kInvalidClass: return "invalid-class";
    case ErrorCode::kInvalidOrdering: return "invalid-ordering";
    case ErrorCode::kNotSink: return "not-sink";
    case ErrorCode::kBoundExceeded: return "bound-exceeded";
    case ErrorCode::kNotPalindromic: return "not-palindromic";
    case ErrorCode::kUnknownFormat: return "unknown-format";
    case ErrorCode::kEmptyCatalog: return "empty-catalog";
    case ErrorCode::kIo: return "io";
    case ErrorCode::kInvariantViolation: return "invariant-violation";
  }
  return "unknown";
}

}  // namespace twobridge
