#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace singlink {

enum class ErrorKind {
  InvalidArgument,
  NonUnit,
  DimensionMismatch,
  SearchBoundExceeded,
  HomogeneityViolation,
  SyntaxError,
  DanglingEdge,
  SlotReuse,
  BadBasepoint,
  UnknownName,
  PatternMismatch,
  NotInvolutive,
  CocycleInvalid,
};

std::string_view to_string(ErrorKind kind);

/// Domain error raised by every module. The CLI maps it to exit code 1.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace singlink
