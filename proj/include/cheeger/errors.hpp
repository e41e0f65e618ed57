#pragma once

#include <stdexcept>
#include <string>

namespace cheeger {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed user input: bad JSON, invalid polygon, bad flags.
class InputError : public Error {
 public:
  using Error::Error;
};

class InvalidPolygon : public InputError {
 public:
  using InputError::InputError;
};

class NonConvexInput : public InputError {
 public:
  using InputError::InputError;
};

class ResolutionTooSmall : public InputError {
 public:
  using InputError::InputError;
};

class CapExceeded : public InputError {
 public:
  using InputError::InputError;
};

class DomainError : public InputError {
 public:
  using InputError::InputError;
};

/// Raised by the Koch A/B region formulas when the gap case does not match.
class CaseMismatch : public DomainError {
 public:
  using DomainError::DomainError;
};

class IoError : public Error {
 public:
  using Error::Error;
};

/// The inner parallel set is empty where a nonempty one is required.
class EmptyRetract : public Error {
 public:
  using Error::Error;
};

class DegenerateDomain : public Error {
 public:
  using Error::Error;
};

/// Numerical failure inside a solver (inconsistent signs, no convergence).
class NumericalError : public Error {
 public:
  using Error::Error;
};

class NoSignChange : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class Disconnected : public Error {
 public:
  using Error::Error;
};

class NeckDetected : public Error {
 public:
  NeckDetected(const std::string& what, double radius, int components)
      : Error(what), radius_(radius), components_(components) {}

  double radius() const noexcept { return radius_; }
  int components() const noexcept { return components_; }

 private:
  double radius_;
  int components_;
};

}  // namespace cheeger
