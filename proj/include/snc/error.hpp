#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace snc {

enum class ErrorCode {
  InvalidInput = 1,
  ParseError,
  DependentInput,
  UnsaturatedWindow,
  NonFreeAction,
  SncConditionViolated,
  NotAComplex,
  NotEquidimensional,
  DimensionMismatch,
  MissingInput,
  InvalidParams,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above; the C
/// API maps them one-to-one onto its status enum.
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

}  // namespace snc
