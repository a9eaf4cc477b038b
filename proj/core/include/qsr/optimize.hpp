#pragma once

#include <functional>

namespace qsr {

struct Extremum {
  double argument;
  double value;
  int iterations;
};

/// Golden-section search for the maximum of a unimodal f on [a, b].
/// Stops when the bracket is narrower than tol (absolute). Throws
/// ConvergenceError if max_iterations is reached first.
Extremum golden_section_maximize(const std::function<double(double)>& f, double a, double b,
                                 double tol = 1e-12, int max_iterations = 500);

/// Bisection root of f on [a, b]; f(a) and f(b) must differ in sign.
/// Throws ConvergenceError when the root is not bracketed.
double bisect(const std::function<double(double)>& f, double a, double b, double tol = 1e-12,
              int max_iterations = 200);

}  // namespace qsr
