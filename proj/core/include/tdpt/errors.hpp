#pragma once

#include <stdexcept>
#include <string>

namespace tdpt {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid or malformed configuration values.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// A grid too coarse to represent the requested object.
class ResolutionError : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

/// API misuse, e.g. combining wave functions on different grids.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the mathematical domain of a formula.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Enumeration or integer size beyond the supported limits.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// A physical or numerical guard tripped during a run.
class PhysicsGuardError : public Error {
 public:
  using Error::Error;
};

/// A quantity that must be real within rounding had a large imaginary part.
class NumericalConsistencyError : public PhysicsGuardError {
 public:
  using PhysicsGuardError::PhysicsGuardError;
};

/// The wave packet reached the edge of the periodic grid.
class BoundaryError : public PhysicsGuardError {
 public:
  using PhysicsGuardError::PhysicsGuardError;
};

}  // namespace tdpt
