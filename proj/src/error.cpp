#include "finembed/error.hpp"

namespace finembed {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidKind: return "invalid-kind";
    case ErrorCode::kEmptyAlphabet: return "empty-alphabet";
    case ErrorCode::kBoundTooLarge: return "bound-too-large";
    case ErrorCode::kNonAssociative: return "non-associative";
    case ErrorCode::kElementOutOfWindow: return "element-out-of-window";
    case ErrorCode::kWrongCarrier: return "wrong-carrier";
    case ErrorCode::kEmptyD: return "empty-D";
    case ErrorCode::kInconsistentDegree: return "inconsistent-degree";
    case ErrorCode::kLetterNotInAlphabet: return "letter-not-in-alphabet";
    case ErrorCode::kMalformedTerm: return "malformed-term";
    case ErrorCode::kArityMismatch: return "arity-mismatch";
    case ErrorCode::kParamsOutsideR: return "params-outside-R";
    case ErrorCode::kFOutsideWindow: return "F-outside-window";
    case ErrorCode::kFTooLarge: return "F-too-large";
    case ErrorCode::kANotExplicit: return "A-not-explicit";
    case ErrorCode::kAEmpty: return "A-empty";
    case ErrorCode::kUnionEmbeddingFails: return "union-embedding-fails";
    case ErrorCode::kUnverifiedPair: return "unverified-pair";
    case ErrorCode::kNetExceedsWindow: return "net-exceeds-window";
    case ErrorCode::kPatternInstanceOverflow: return "pattern-instance-overflow";
    case ErrorCode::kBudgetExceeded: return "budget-exceeded";
    case ErrorCode::kNonHomogeneousRejected: return "non-homogeneous-rejected";
    case ErrorCode::kZeroVariables: return "zero-variables";
    case ErrorCode::kUnknownSuite: return "unknown-suite";
    case ErrorCode::kInvalidArgument: return "invalid-argument";
    case ErrorCode::kMalformedInput: return "malformed-input";
  }
  return "unknown-error";
}

}  // namespace finembed
