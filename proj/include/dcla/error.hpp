#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dcla {

enum class ErrorCode {
  NotAppreciable,
  ShapeMismatch,
  SingularStandardPart,
  Inconsistent,
  NotSkewSymmetric,
  NotHermitian,
  NotOrthogonal,
  BadEigenspace,
  UnknownEigenvalue,
  IllConditionedGap,
  ResidualExceeded,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Validation failures are input problems; the rest are numerical.
constexpr bool is_validation_error(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotAppreciable:
    case ErrorCode::ShapeMismatch:
    case ErrorCode::NotSkewSymmetric:
    case ErrorCode::NotHermitian:
    case ErrorCode::NotOrthogonal:
    case ErrorCode::BadEigenspace:
    case ErrorCode::UnknownEigenvalue:
    case ErrorCode::InvalidArgument:
      return true;
    default:
      return false;
  }
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace dcla
