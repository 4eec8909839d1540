#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qheun {

enum class ErrorKind {
  DivisionByZero,
  ParseError,
  ZeroDenominator,
  ZeroScale,
  PoleAtPoint,
  NotAPole,
  HigherOrderPole,
  DegenerateGrid,
  NotSymmetric,
  UnexpectedPole,
  BoundaryPole,
  InternalCheckFailed,
  InvariantViolation,
  ShapeMismatch,
  BasisSolveFailed,
  IndexOutOfRange,
  RaisingViolation,
  DegenerateDenominator,
  ZeroGauge,
  CoincidenceFailed,
  RelationFailed,
  ZeroArgument,
  NearPole,
  NoConvergence,
  NotConstant,
  InvalidParameters,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library. The kind is the machine-readable
/// part; the message carries the offending values in exact text form.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace qheun
