#pragma once

#include <stdexcept>
#include <string>

namespace rrg {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A coupling cell came out negative beyond rounding slack.
class InfeasiblePoint : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Bracketing, bisection or refinement did not converge.
class NumericalFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The full-zero Galton-Watson process is supercritical, so the augmented
/// density is not defined.
class GwSupercritical : public std::runtime_error {
 public:
  GwSupercritical(int degree, double offspring_mean);

  int degree() const noexcept { return degree_; }
  double offspring_mean() const noexcept { return offspring_mean_; }

 private:
  int degree_;
  double offspring_mean_;
};

}  // namespace rrg
