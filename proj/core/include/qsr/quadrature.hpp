#pragma once

#include <functional>

namespace qsr {

struct QuadratureConfig {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  int max_depth = 60;  // maximum bisection depth of any subinterval

  /// Throws DomainError unless abs_tol > 0, rel_tol > 0, max_depth >= 10.
  void validate() const;
};

struct QuadratureResult {
  double value;
  double error;  // estimated absolute error
  int evaluations;
};

/// Globally adaptive 15-point Gauss-Kronrod integration of f over [a, b].
///
/// The subinterval with the largest error estimate is bisected until the
/// total estimate drops below max(abs_tol, rel_tol * |value|). The sequence of
/// bisections depends only on f, [a, b] and cfg, so results are reproducible.
/// Throws ConvergenceError (carrying the best estimate and its error bound)
/// when a subinterval would have to be split beyond cfg.max_depth.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureConfig& cfg = {});

/// Convenience wrapper returning only the value.
double quad_adaptive(const std::function<double(double)>& f, double a, double b,
                     const QuadratureConfig& cfg = {});

}  // namespace qsr
