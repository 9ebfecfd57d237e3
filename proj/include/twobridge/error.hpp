#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace twobridge {

enum class ErrorCode {
  kEvenDenominator,
  kDenominatorTooSmall,
  kNotCoprime,
  kZeroResidue,
  kMalformedText,
  kZeroEntry,
  kOddEntry,
  kOddLength,
  kDivisionByZero,
  kOverflow,
  kInvalidClass,
  kInvalidOrdering,
  kNotSink,
  kBoundExceeded,
  kNotPalindromic,
  kUnknownFormat,
  kEmptyCatalog,
  kIo,
  kInvariantViolation,
};

/// Stable kebab-case name, used in machine-readable error lines.
std::string_view error_code_name(ErrorCode code);

/// All library failures are reported through this type. The code tells
/// callers (and the CLI exit status) which kind of failure occurred.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  /// True for failures caused by bad input, as opposed to broken internal
  /// invariants.
  bool is_validation() const noexcept {
    return code_ != ErrorCode::kInvariantViolation;
  }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

inline void check_invariant(bool condition, const std::string& message) {
  if (!condition) fail(ErrorCode::kInvariantViolation, message);
}

}  // namespace twobridge
