#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace flagphase {

enum class ErrorCode {
  InvalidCartanType,
  DimensionMismatch,
  IndexOutOfRange,
  NotKahler,
  InvalidClass,
  RootNotInParabolicSet,
  BoundaryAmbiguous,
  ZeroTotalCharge,
  InvalidRank,
  TooManySummands,
  DimensionTooSmall,
  NotIntegral,
  GuaranteeViolated,
  InvalidArgument,
  Internal,
};

std::string_view to_string(ErrorCode code);

// Every domain failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

}  // namespace flagphase
