#include "qsr/optimize.hpp"

#include <cmath>

#include "qsr/errors.hpp"

namespace qsr {

Extremum golden_section_maximize(const std::function<double(double)>& f, double a, double b,
                                 double tol, int max_iterations) {
  if (!(a < b)) throw DomainError("golden-section search needs a < b");
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;

  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);

  for (int it = 0; it < max_iterations; ++it) {
    if (b - a <= tol) {
      return fc >= fd ? Extremum{c, fc, it} : Extremum{d, fd, it};
    }
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  throw ConvergenceError("golden-section search did not converge", fc >= fd ? c : d, b - a);
}

double bisect(const std::function<double(double)>& f, double a, double b, double tol,
              int max_iterations) {
  double fa = f(a);
  const double fb = f(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if ((fa < 0.0) == (fb < 0.0)) {
    throw ConvergenceError("root is not bracketed", 0.5 * (a + b), b - a);
  }
  for (int it = 0; it < max_iterations; ++it) {
    const double mid = 0.5 * (a + b);
    if (b - a <= tol) return mid;
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm < 0.0) == (fa < 0.0)) {
      a = mid;
      fa = fm;
    } else {
      b = mid;
    }
  }
  throw ConvergenceError("bisection did not converge", 0.5 * (a + b), b - a);
}

}  // namespace qsr
