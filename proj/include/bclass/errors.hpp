#ifndef BCLASS_ERRORS_HPP
#define BCLASS_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bclass {

/// Malformed input text. `position` is a 0-based byte offset into the source.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// An input violates a documented precondition of an operation
/// (wrong exponent structure, non-integer order, degenerate inner function).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Division of a function by the identically-zero function.
class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Numeric evaluation left the domain of an expression node.
class EvaluationError : public std::domain_error {
 public:
  EvaluationError(std::size_t position, const std::string& message)
      : std::domain_error(message + " (expression position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Linear system whose elimination hit a vanishing pivot.
class SingularSystemError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bclass

#endif  // BCLASS_ERRORS_HPP
