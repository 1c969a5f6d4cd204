#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sphalg {

/// Raised when an argument violates an operation's documented precondition
/// (dimension mismatch, out-of-range index, non-homogeneous input, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Division by an exact zero.
class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero") {}
};

/// Text that does not conform to the scalar/polynomial grammar.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace sphalg
