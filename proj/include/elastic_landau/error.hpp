#pragma once

#include <stdexcept>
#include <string>

namespace elastic_landau {

/// Invalid input to an operation (bad parameter, out-of-domain argument).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Base for failures of a numerical procedure on otherwise valid input.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// No discrete spectrum: the dislocation density (or k) vanishes, so nothing
/// confines the particle radially.
class UnboundSystemError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class NonConvergenceError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class RootNotFoundError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// The energy has a kink in the phase (gamma_s == 0) so the current is undefined.
class NonDifferentiableError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// A finite-difference stencil crosses a kink of the level function.
class StraddleError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace elastic_landau
