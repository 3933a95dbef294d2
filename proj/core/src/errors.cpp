#include "flagphase/errors.hpp"

namespace flagphase {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidCartanType: return "InvalidCartanType";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NotKahler: return "NotKahler";
    case ErrorCode::InvalidClass: return "InvalidClass";
    case ErrorCode::RootNotInParabolicSet: return "RootNotInParabolicSet";
    case ErrorCode::BoundaryAmbiguous: return "BoundaryAmbiguous";
    case ErrorCode::ZeroTotalCharge: return "ZeroTotalCharge";
    case ErrorCode::InvalidRank: return "InvalidRank";
    case ErrorCode::TooManySummands: return "TooManySummands";
    case ErrorCode::DimensionTooSmall: return "DimensionTooSmall";
    case ErrorCode::NotIntegral: return "NotIntegral";
    case ErrorCode::GuaranteeViolated: return "GuaranteeViolated";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace flagphase
