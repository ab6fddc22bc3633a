#ifndef COMMFAM_ERRORS_HPP
#define COMMFAM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace commfam {

/// Error categories surfaced through the library API and mapped to CLI exit codes.
enum class ErrorCode {
  Parse,
  Jacobi,
  DimensionMismatch,
  MissingAssignment,
  ZeroDenominator,
  NotAnIdeal,
  NotClosed,
  NilradicalUnverified,
  InconsistentStructure,
  PreconditionFailed,
  NotCommutativeIdeal,
  NoDimensionDrop,
  UnknownName,
  NotVerifiedInvariant,
  RetryBudgetExhausted,
  Unsupported,
  ParityViolation,
  AllPointsSingular,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace commfam

#endif
