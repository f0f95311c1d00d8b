#pragma once

#include <stdexcept>
#include <string>

namespace dsw {

// Base class for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Argument outside the documented domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Evaluation too close to a pole of the target function.
class PoleError : public Error {
 public:
  using Error::Error;
};

// Two evaluation regimes disagree beyond their stated overlap accuracy.
class AccuracyError : public Error {
 public:
  using Error::Error;
};

// Adaptive quadrature could not meet the requested tolerance in budget.
class QuadratureError : public Error {
 public:
  using Error::Error;
};

// Point on a branch cut evaluated without a side selector.
class BranchError : public Error {
 public:
  using Error::Error;
};

// Evaluation inside the excluded disk around a branch point.
class EndpointError : public Error {
 public:
  using Error::Error;
};

// An extrapolation ladder failed to settle.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

// Point on a sector boundary ray evaluated without a sector selector.
class SectorError : public Error {
 public:
  using Error::Error;
};

// Linear system for the refinement coefficients is near-singular.
class DegenerateError : public Error {
 public:
  using Error::Error;
};

// Run configuration is missing, malformed, or inconsistent.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Field amplitude exceeded the stability guard during time stepping.
class BlowupError : public Error {
 public:
  using Error::Error;
};

}  // namespace dsw
