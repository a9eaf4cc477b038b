#include "qsr/boson.hpp"

#include <cmath>
#include <limits>

#include "qsr/errors.hpp"
#include "qsr/special_integrals.hpp"

namespace qsr {
namespace {

const double kSqrt3 = std::sqrt(3.0);

// (sqrt3 - sqrt(3 - 2 u)) / (sqrt3 + sqrt(3 - 2 u)) = 2 u / (sqrt3 + sqrt(3 - 2 u))^2
double deform(double u) {
  const double root = kSqrt3 + std::sqrt(3.0 - 2.0 * u);
  return 2.0 * u / (root * root);
}

double shape_at(Polarization s, double xbar, double c) {
  const double sigma = 1.0 - xbar;
  const double pi = (1.0 + xbar) * (1.0 + xbar) * c * c / (1.0 - xbar);
  switch (s) {
    case Polarization::sigma: return sigma;
    case Polarization::pi: return pi;
    case Polarization::total: return sigma + pi;
    case Polarization::right:
    case Polarization::left: return 0.5 * (sigma + pi) + label(s) * (1.0 + xbar) * c;
  }
  return std::numeric_limits<double>::quiet_NaN();
}

}  // namespace

BosonDeformation boson_deformation(const Speed& speed, double theta) {
  check_theta(theta);
  const double sn = std::sin(theta);
  return {deform(speed.beta2()), deform(speed.beta2() * sn * sn)};
}

BosonRadiation::BosonRadiation(const Speed& speed, const QuadratureConfig& cfg)
    : speed_(speed), xbar0_(deform(speed.beta2())) {
  f1_ = f_b(1, xbar0_, cfg);
  f2_ = f_b(2, xbar0_, cfg);
  f0_ = f2_ + f_b(3, xbar0_, cfg);
}

BosonDeformation BosonRadiation::deformation(double theta) const {
  return boson_deformation(speed_, theta);
}

double BosonRadiation::shape(Polarization s, double theta) const {
  return phi_b(s, speed_, theta);
}

double BosonRadiation::density(Polarization s, double theta) const {
  const double xbar = deformation(theta).xbar;
  const double phi = shape_at(s, xbar, cos_theta(theta));
  const double up = 1.0 + xbar;
  return up * up * up * std::exp(-xbar) * phi / ((1.0 + xbar0_) * (1.0 + xbar0_) * f0_);
}

double BosonRadiation::local_polarization(Polarization s, double theta) const {
  return local_polarization_b(s, speed_, theta);
}

double BosonRadiation::half_plane_fraction(Polarization s, HalfPlane half) const {
  if (half == HalfPlane::lower) s = mirrored(s);
  switch (s) {
    case Polarization::total: return 1.0;
    case Polarization::sigma: return f2_ / f0_;
    case Polarization::pi: return 1.0 - f2_ / f0_;
    case Polarization::right:
    case Polarization::left: return 0.5 + label(s) * f1_ / f0_;
  }
  return std::numeric_limits<double>::quiet_NaN();
}

double BosonRadiation::shape_factor() const {
  return 3.0 * (1.0 + xbar0_) * (1.0 + xbar0_) * f0_ / 8.0;
}

BosonPower BosonRadiation::total_power() const {
  const double shape = shape_factor();
  if (speed_.is_limit()) return {std::numeric_limits<double>::infinity(), shape};
  const double b2 = speed_.beta2();
  const double amplitude = b2 * b2 * b2 / speed_.inv_gamma2();
  return {4.0 * amplitude / 81.0 * shape, shape};
}

double phi_b(Polarization s, const Speed& speed, double theta) {
  const double xbar = boson_deformation(speed, theta).xbar;
  return shape_at(s, xbar, cos_theta(theta));
}

BosonPower total_power_b(const Speed& speed, const QuadratureConfig& cfg) {
  return BosonRadiation(speed, cfg).total_power();
}

double half_plane_fraction_b(Polarization s, const Speed& speed, const QuadratureConfig& cfg,
                             HalfPlane half) {
  return BosonRadiation(speed, cfg).half_plane_fraction(s, half);
}

double angular_density_b(Polarization s, const Speed& speed, double theta,
                         const QuadratureConfig& cfg) {
  return BosonRadiation(speed, cfg).density(s, theta);
}

double local_polarization_b(Polarization s, const Speed& speed, double theta) {
  const double xbar = boson_deformation(speed, theta).xbar;
  const double c = cos_theta(theta);
  return shape_at(s, xbar, c) / shape_at(Polarization::total, xbar, c);
}

}  // namespace qsr
