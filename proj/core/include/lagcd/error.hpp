#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lagcd {

enum class ErrorCode {
  DuplicateNodes,
  NearDuplicateNodes,
  InsufficientNodes,
  InvalidArgument,
  EigensolveFailure,
  DegenerateInput,
  ZeroPolynomial,
  LengthMismatch,
  SizeGuard,
};

std::string_view toString(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above; the
/// message is prefixed with the code name so callers printing `what()` show it.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace lagcd
