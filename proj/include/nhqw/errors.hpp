#pragma once

#include <stdexcept>
#include <string>

namespace nhqw {

/// Base class for all toolkit errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An argument value is outside the operation's domain.
struct DomainError : Error {
  using Error::Error;
};

/// A walk configuration or scheme is invalid or inconsistent (bad lattice
/// sizes, margin violations, unknown fields, ...).
struct ConfigError : Error {
  using Error::Error;
};

/// The GBZ radius diverges: cosh(gamma) cos(theta2) + sinh(gamma) == 0.
struct SingularityError : Error {
  using Error::Error;
};

/// cos(theta1) == 0: the beta quadratic degenerates and the dispersion
/// becomes flat (independent of beta).
struct DegenerateDispersionError : Error {
  using Error::Error;
};

/// Eigenvalues are too close to coalescing for a stable eta metric.
struct EpProximityError : Error {
  using Error::Error;
};

/// Two values passed together violate a shared precondition (e.g. a
/// balanced/lossy conversion with mismatched gamma).
struct ContractError : Error {
  using Error::Error;
};

/// Problem size exceeds a configured resource cap.
struct ResourceError : Error {
  using Error::Error;
};

/// Root bracketing failed: no sign change over the scan interval.
struct BracketingError : Error {
  using Error::Error;
};

/// The dense eigensolver failed to converge.
struct SolverError : Error {
  using Error::Error;
};

}  // namespace nhqw
