#include "qsr/special_integrals.hpp"

#include <cmath>
#include <numbers>

#include "qsr/errors.hpp"

namespace qsr {
namespace {

constexpr double kInvE = 1.0 / std::numbers::e;
// Common value of f_1^e, f_2^e, f_3^e at x = 1.
constexpr double kElectronEdge = 2.0 - 3.0 * kInvE;
// Common value of f_1^b, f_2^b, f_3^b at x = 1.
constexpr double kBosonEdge = 4.0 * kInvE - 1.0;
// Ei(1), the exponential integral at 1.
constexpr double kEi1 = 1.8951178163559367555;
// Shared part of the linear boundary coefficients of f_2 and f_3.
constexpr double kEdgeLog = 2.0 * (std::numbers::ln2 - std::numbers::egamma + kEi1) * kInvE;

void check_index(int k) {
  if (k < 0 || k > 3) throw DomainError("integral index k must be 0, 1, 2 or 3");
}

void check_argument(double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("integral argument must lie in [0, 1]");
}

double f1_boson(double x) {
  if (x < integrals::kSmallArgument) return 1.0 - x / 2.0 - x * x / 6.0 + 5.0 * x * x * x / 24.0;
  return (1.0 + x) * (1.0 + x) * (std::expm1(-x) / x) + 2.0 + x;
}

double f1_electron(double x) {
  if (x < integrals::kSmallArgument) return 1.0 - x * x / 6.0 + x * x * x / 12.0;
  return -(2.0 + x) * (std::expm1(-x) / x) - 1.0;
}

double integrate_substituted(Particle kind, int k, double x, const QuadratureConfig& cfg) {
  auto integrand = [kind, k, x](double t) { return integrals::substituted_integrand(kind, k, x, t); };
  // Near x = 1 the integrand peaks in a layer of width ~(1 - x) at t = 1.
  const double layer = 1.0 - x;
  if (layer < 0.05) {
    const double split = 1.0 - 8.0 * layer;
    return quad_adaptive(integrand, 0.0, split, cfg) + quad_adaptive(integrand, split, 1.0, cfg);
  }
  return quad_adaptive(integrand, 0.0, 1.0, cfg);
}

}  // namespace

namespace integrals {

double substituted_integrand(Particle kind, int k, double x, double t) {
  if (k != 2 && k != 3) throw DomainError("substituted integrands exist for k = 2, 3 only");
  const double t2 = t * t;
  // 1 - x^2 t^2 = (1 - x t)(1 + x t), with 1 - x t = (1 - x) + x (1 - t).
  const double denom = ((1.0 - x) + x * (1.0 - t)) * (1.0 + x * t);
  const double expo = std::exp(-x * (1.0 - t) * (1.0 + t) / denom);
  const double base = 1.0 - x * t2;
  const double weight = k == 2 ? 1.0 : t2;

  if (kind == Particle::boson) {
    const double d4 = (denom * denom) * (denom * denom);
    if (k == 2) {
      const double up = 1.0 + x * t2;
      return 2.0 * (1.0 + x) * (1.0 - x) * (1.0 - x) * base * up * up / d4 * expo;
    }
    const double omx2 = (1.0 - x) * (1.0 + x);
    return 2.0 * (1.0 + x) * omx2 * omx2 * base * weight / d4 * expo;
  }

  const double d3 = denom * denom * denom;
  return 2.0 * (1.0 + x) * (1.0 - x) * (1.0 + x) * base * weight / d3 * expo;
}

double electron_boundary_series(int k, double x) {
  const double h = 1.0 - x;
  const double hlog = h > 0.0 ? h * std::log(h) : 0.0;
  switch (k) {
    case 1: return kElectronEdge + (2.0 - 5.0 * kInvE) * h;
    case 2: return kElectronEdge - 2.0 * kInvE * hlog + (kInvE - 1.0 + kEdgeLog) * h;
    case 3: return kElectronEdge + 2.0 * kInvE * hlog + (5.0 - 7.0 * kInvE - kEdgeLog) * h;
    case 0: return 2.0 * kElectronEdge + (4.0 - 6.0 * kInvE) * h;
    default: throw DomainError("integral index k must be 0, 1, 2 or 3");
  }
}

double electron_small_series(int k, double x) {
  const double x2 = x * x;
  switch (k) {
    case 1: return 1.0 - x2 / 6.0;
    case 2: return 2.0 * (1.0 - 3.0 * x2 / 5.0);
    case 3: return 2.0 / 3.0 * (1.0 + 3.0 * x2 / 35.0);
    case 0: return electron_small_series(2, x) + electron_small_series(3, x);
    default: throw DomainError("integral index k must be 0, 1, 2 or 3");
  }
}

}  // namespace integrals

double f_b(int k, double x, const QuadratureConfig& cfg) {
  check_index(k);
  check_argument(x);
  if (k == 0) return f_b(2, x, cfg) + f_b(3, x, cfg);
  if (k == 1) return f1_boson(x);
  if (x == 1.0) return kBosonEdge;
  return integrate_substituted(Particle::boson, k, x, cfg);
}

double f_e(int k, double x, const QuadratureConfig& cfg) {
  check_index(k);
  check_argument(x);
  if (k == 0) return f_e(2, x, cfg) + f_e(3, x, cfg);
  if (k == 1) return f1_electron(x);
  if (x == 1.0) return kElectronEdge;
  if (1.0 - x < integrals::kBoundaryWidth) return integrals::electron_boundary_series(k, x);
  return integrate_substituted(Particle::electron, k, x, cfg);
}

double f_k(Particle kind, int k, double x, const QuadratureConfig& cfg) {
  return kind == Particle::boson ? f_b(k, x, cfg) : f_e(k, x, cfg);
}

}  // namespace qsr
