#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace zp {

enum class ErrorKind {
  parse,
  unknown_variable,
  non_rational_literal,
  degree_cap,
  support_misses_origin,
  all_zero,
  center_not_over_origin,
  center_not_rational,
  invalid_center,
  step_budget_exceeded,
  residual_not_unit,
  not_exceptional,
  order_two_candidate,
  not_a_candidate,
  not_minimal,
  degenerate_lambda,
  retries_exhausted,
  parameter_order,
  out_of_range,
  malformed_diagram,
  invariant_violation,
  invalid_argument,
};

inline std::string_view kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::parse: return "ParseError";
    case ErrorKind::unknown_variable: return "UnknownVariable";
    case ErrorKind::non_rational_literal: return "NonRationalLiteral";
    case ErrorKind::degree_cap: return "DegreeCapExceeded";
    case ErrorKind::support_misses_origin: return "SupportMissesOrigin";
    case ErrorKind::all_zero: return "AllZero";
    case ErrorKind::center_not_over_origin: return "CenterNotOverOrigin";
    case ErrorKind::center_not_rational: return "CenterNotRational";
    case ErrorKind::invalid_center: return "InvalidCenter";
    case ErrorKind::step_budget_exceeded: return "StepBudgetExceeded";
    case ErrorKind::residual_not_unit: return "ResidualNotUnit";
    case ErrorKind::not_exceptional: return "NotExceptional";
    case ErrorKind::order_two_candidate: return "OrderTwoCandidate";
    case ErrorKind::not_a_candidate: return "NotACandidate";
    case ErrorKind::not_minimal: return "NotMinimal";
    case ErrorKind::degenerate_lambda: return "DegenerateLambda";
    case ErrorKind::retries_exhausted: return "RetriesExhausted";
    case ErrorKind::parameter_order: return "ParameterOrder";
    case ErrorKind::out_of_range: return "OutOfRange";
    case ErrorKind::malformed_diagram: return "MalformedDiagram";
    case ErrorKind::invariant_violation: return "InvariantViolation";
    case ErrorKind::invalid_argument: return "InvalidArgument";
  }
  return "Error";
}

/// Every failure raised by the library carries a kind so front ends can map
/// it to an exit status without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(kind_name(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parse errors also remember the byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, std::size_t pos, const std::string& what)
      : Error(kind, what + " at position " + std::to_string(pos)), pos_(pos) {}

  std::size_t position() const noexcept { return pos_; }

 private:
  std::size_t pos_;
};

}  // namespace zp
