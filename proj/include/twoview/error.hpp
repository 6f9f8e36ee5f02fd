#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace twoview {

enum class ErrorCode {
  kDimensionMismatch,
  kNonPositiveDepth,
  kTooFewPoints,
  kDegenerateConfiguration,
  kRankDeficientEssential,
  kZeroVector,
  kConfigInvalid,
  kParse,
};

// Stable machine-readable names, used in CLI reports.
constexpr std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDimensionMismatch: return "dimension_mismatch";
    case ErrorCode::kNonPositiveDepth: return "non_positive_depth";
    case ErrorCode::kTooFewPoints: return "too_few_points";
    case ErrorCode::kDegenerateConfiguration: return "degenerate_configuration";
    case ErrorCode::kRankDeficientEssential: return "rank_deficient_essential";
    case ErrorCode::kZeroVector: return "zero_vector";
    case ErrorCode::kConfigInvalid: return "config_invalid";
    case ErrorCode::kParse: return "parse_error";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace twoview
