#pragma once

#include <stdexcept>
#include <string>

namespace mpex {

enum class ErrorCode {
  InvalidArgument,
  InvalidArity,
  InvalidSize,
  OutOfRange,
  NotAnEdge,
  BudgetExceeded,
  Overflow,
  Parse,
  Io,
};

const char* error_code_name(ErrorCode code) noexcept;

/// Exception carried by every failing core operation. The C API maps the
/// code onto an mpex_status value.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace mpex
