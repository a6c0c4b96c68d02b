#ifndef LIEBOUND_ERROR_HPP
#define LIEBOUND_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace liebound {

enum class ErrorCode {
  DimensionMismatch,
  NotSquare,
  ZeroPolynomial,
  NotSubalgebra,
  NotIdeal,
  InternalInconsistency,
  NotInvertible,
  NotHomomorphism,
  NotInvariant,
  PreconditionViolation,
  NoSolution,
  NotSolvable,
  NotSemisimple,
  SplittingFailed,
  IdealNotPermuted,
  NotPeriodic,
  OrderTooLarge,
  InvalidParameter,
  EmptyFamily,
  NotSemisimpleAut,
  ParseError,
  Overflow,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above so that
// callers (the CLI in particular) can map it onto an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), message_(what) {}

  ErrorCode code() const noexcept { return code_; }
  // what() without the code prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorCode code_;
  std::string message_;
};

}  // namespace liebound

#endif  // LIEBOUND_ERROR_HPP
