#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace semiloop {

enum class ErrorCode {
  NotPrime,
  ReducibleModulus,
  NonPrimitiveModulusRoot,
  InvalidArgument,
  ParseError,
  DivisionByZeroPoly,
  NotMonic,
  DegreeZero,
  ReducibleF,
  RightInvariantF,
  ZeroElement,
  DegreeMismatch,
  NotTransitive,
  TooLarge,
  DegreeCapExceeded,
  SizeCapExceeded,
  NotClosed,
  InadmissiblePolynomial,
  FormulaMismatch,
  PreconditionViolated,
  InvariantViolation,
};

std::string_view to_string(ErrorCode code);

/// Single exception type for the library; `code()` classifies the failure.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace semiloop
