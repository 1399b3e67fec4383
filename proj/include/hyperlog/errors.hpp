#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hyperlog {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A documented precondition of an operation was violated (non-integrality
/// of a triple, argument outside a domain, divisor mismatch, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Mathematical domain error during evaluation (pole, log of zero, even root
/// of a negative value, division by zero).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An iterative method did not reach its target accuracy.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double achieved_digits)
      : Error(what), achieved_digits_(achieved_digits) {}
  double achieved_digits() const noexcept { return achieved_digits_; }

 private:
  double achieved_digits_;
};

/// Malformed textual input. `position` is a 0-based character offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace hyperlog
