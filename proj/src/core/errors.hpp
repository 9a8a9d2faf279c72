#pragma once

#include <stdexcept>
#include <string>

namespace halfline {

enum class ErrorCode {
  InvalidArgument,
  NotSquare,
  NotHermitian,
  NotUnitary,
  DimensionMismatch,
  SideMismatch,
  OutOfDomain,
  NotInDomain,
  TooCloseToRealAxis,
  DegenerateKernel,
  ZeroVector,
  WrongHalfPlane,
  ParseError,
};

// Single exception type for the whole library; the C layer maps `code`
// onto its status enum.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

const char* error_code_name(ErrorCode code);

}  // namespace halfline
