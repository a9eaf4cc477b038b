#include "qsr/quadrature.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

#include "qsr/errors.hpp"

namespace qsr {
namespace {

// Kronrod 15-point abscissae on [-1, 1] (nonnegative half, descending) and
// weights; odd indices are the embedded 7-point Gauss nodes.
constexpr std::array<double, 8> kNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
};
constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};
constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
};

// Hard cap on the number of live subintervals, in addition to max_depth.
constexpr std::size_t kMaxIntervals = 200000;

struct Segment {
  double a;
  double b;
  double value;
  double error;
  int depth;

  bool operator<(const Segment& other) const { return error < other.error; }
};

Segment gauss_kronrod(const std::function<double(double)>& f, double a, double b, int depth) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  const double fc = f(center);
  double kronrod = fc * kKronrodWeights[7];
  double gauss = fc * kGaussWeights[3];
  double abs_sum = std::abs(kronrod);

  for (std::size_t i = 0; i < 7; ++i) {
    const double dx = half * kNodes[i];
    const double f1 = f(center - dx);
    const double f2 = f(center + dx);
    kronrod += kKronrodWeights[i] * (f1 + f2);
    abs_sum += kKronrodWeights[i] * (std::abs(f1) + std::abs(f2));
    if (i % 2 == 1) gauss += kGaussWeights[i / 2] * (f1 + f2);
  }

  kronrod *= half;
  gauss *= half;
  abs_sum *= std::abs(half);

  const double roundoff = 50.0 * std::numeric_limits<double>::epsilon() * abs_sum;
  const double error = std::max(std::abs(kronrod - gauss), roundoff);
  return {a, b, kronrod, error, depth};
}

}  // namespace

void QuadratureConfig::validate() const {
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0) || max_depth < 10) {
    throw DomainError("quadrature config requires abs_tol > 0, rel_tol > 0, max_depth >= 10");
  }
}

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureConfig& cfg) {
  cfg.validate();
  if (!std::isfinite(a) || !std::isfinite(b)) throw DomainError("integration limits must be finite");
  if (a == b) return {0.0, 0.0, 0};

  std::priority_queue<Segment> heap;
  const Segment whole = gauss_kronrod(f, a, b, 0);
  heap.push(whole);
  double value = whole.value;
  double error = whole.error;
  int evaluations = 15;

  // Sums are re-accumulated from the heap now and then to shed drift.
  auto resum = [&heap, &value, &error] {
    auto copy = heap;
    value = 0.0;
    error = 0.0;
    while (!copy.empty()) {
      value += copy.top().value;
      error += copy.top().error;
      copy.pop();
    }
  };

  for (std::size_t iteration = 1;; ++iteration) {
    if (!std::isfinite(value)) {
      throw ConvergenceError("integrand is not finite on the interval", value, error);
    }
    if (error <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(value))) break;

    const Segment worst = heap.top();
    if (worst.depth >= cfg.max_depth || heap.size() >= kMaxIntervals) {
      resum();
      throw ConvergenceError("adaptive quadrature exhausted its subdivision budget", value, error);
    }
    heap.pop();

    const double mid = 0.5 * (worst.a + worst.b);
    const Segment left = gauss_kronrod(f, worst.a, mid, worst.depth + 1);
    const Segment right = gauss_kronrod(f, mid, worst.b, worst.depth + 1);
    evaluations += 30;
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);

    if (iteration % 256 == 0) resum();
  }

  resum();
  return {value, error, evaluations};
}

double quad_adaptive(const std::function<double(double)>& f, double a, double b,
                     const QuadratureConfig& cfg) {
  return integrate(f, a, b, cfg).value;
}

}  // namespace qsr
