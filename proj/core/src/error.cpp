#include "lagcd/error.hpp"

namespace lagcd {

std::string_view toString(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DuplicateNodes: return "DuplicateNodes";
    case ErrorCode::NearDuplicateNodes: return "NearDuplicateNodes";
    case ErrorCode::InsufficientNodes: return "InsufficientNodes";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::EigensolveFailure: return "EigensolveFailure";
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::SizeGuard: return "SizeGuard";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(toString(code)) + ": " + detail), code_(code) {}

}  // namespace lagcd
