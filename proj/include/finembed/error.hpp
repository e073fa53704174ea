#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace finembed {

enum class ErrorCode {
  kInvalidKind,
  kEmptyAlphabet,
  kBoundTooLarge,
  kNonAssociative,
  kElementOutOfWindow,
  kWrongCarrier,
  kEmptyD,
  kInconsistentDegree,
  kLetterNotInAlphabet,
  kMalformedTerm,
  kArityMismatch,
  kParamsOutsideR,
  kFOutsideWindow,
  kFTooLarge,
  kANotExplicit,
  kAEmpty,
  kUnionEmbeddingFails,
  kUnverifiedPair,
  kNetExceedsWindow,
  kPatternInstanceOverflow,
  kBudgetExceeded,
  kNonHomogeneousRejected,
  kZeroVariables,
  kUnknownSuite,
  kInvalidArgument,
  kMalformedInput,
};

std::string_view error_code_name(ErrorCode code);

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code), detail_(what) {}

  ErrorCode code() const noexcept { return code_; }
  /// The message without the code prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace finembed
