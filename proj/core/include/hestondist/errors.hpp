#pragma once

#include <stdexcept>
#include <string>

namespace hdist {

/// Input outside the domain of a formula (negative variance, C beyond the
/// apex, |delta| >= 2*pi, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A transcendental equation could not be solved to tolerance.
class SolverFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The supplied bracket does not straddle the target value.
class NoSignChange : public SolverFailure {
 public:
  using SolverFailure::SolverFailure;
};

/// Iteration budget exhausted (bracket search toward an open endpoint).
class MaxIterations : public SolverFailure {
 public:
  using SolverFailure::SolverFailure;
};

/// Grushin pair with y0*y1 < 0 outside the region where d_G = sqrt(2 Lambda*).
class UnsupportedMixedSignFar : public DomainError {
 public:
  using DomainError::DomainError;
};

/// The critical-point system has no solution inside the strip |delta| < pi.
class NoInteriorCritical : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Monte Carlo weights overflowed double precision.
class OverflowGuard : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

}  // namespace hdist
