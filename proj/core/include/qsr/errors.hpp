#pragma once

#include <stdexcept>
#include <string>

namespace qsr {

/// Argument outside the domain of a formula.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Iterative numerics (quadrature, optimization, root finding) gave up.
/// Carries the best estimate reached and its error bound.
class ConvergenceError : public std::runtime_error {
public:
  ConvergenceError(const std::string& what, double best_estimate, double error_bound)
      : std::runtime_error(what), best_estimate_(best_estimate), error_bound_(error_bound) {}

  double best_estimate() const noexcept { return best_estimate_; }
  double error_bound() const noexcept { return error_bound_; }

private:
  double best_estimate_;
  double error_bound_;
};

/// The requested point is a limit whose value depends on the order in which
/// it is approached (electron at beta = 1, theta = pi/2).
class AmbiguousLimitError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

}  // namespace qsr
