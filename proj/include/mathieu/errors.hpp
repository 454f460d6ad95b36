#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mathieu {

/// Operands live in different coefficient rings or variable sets.
class RingMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An argument is outside the domain of an operation (division by zero,
/// non-prime modulus, wrong variable, unmet precondition).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A certificate or identity failed to re-verify. Never expected on valid
/// input; signals an implementation defect.
class VerificationFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : std::invalid_argument(message + " at line " + std::to_string(line) +
                              ", column " + std::to_string(column)),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace mathieu
