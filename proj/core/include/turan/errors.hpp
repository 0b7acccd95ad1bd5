#pragma once

#include <stdexcept>
#include <string>

namespace turan {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside an operation's precondition.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Gamma-function pole (non-positive integer argument).
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Argument outside the supported numeric envelope |x| <= 100, nu in (-1, 60].
class EnvelopeError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A series or iteration failed to meet its stopping rule within its cap.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// Result magnitude exceeds the double range; callers should switch to log form.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// A quadrature integrand produced a non-finite sample.
class EvaluationError : public Error {
 public:
  EvaluationError(const std::string& what, double node)
      : Error(what), node_(node) {}
  double node() const noexcept { return node_; }

 private:
  double node_;
};

/// Invariant broken inside an algorithm that should not be able to fail.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace turan
