#include "qsr/electron.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "qsr/errors.hpp"
#include "qsr/special_integrals.hpp"

namespace qsr {
namespace {

// 2e - 3, the normalization of the ultrarelativistic densities.
constexpr double kLimitNorm = 2.0 * std::numbers::e - 3.0;

// Both linear shapes: `aligned` is phi_2(-1) = phi_3(+1), `crossed` is
// phi_2(+1) = phi_3(-1).
struct LinearShapes {
  double aligned;
  double crossed;
};

LinearShapes linear_shapes(const ElectronDeformation& d, double c) {
  // 1 - x0 x = (1 - x0) + x0 (1 - x)
  const double aligned = d.one_minus_x0 + d.x0 * d.one_minus_x;
  const double up = 1.0 + d.x;
  return {aligned, up * up * c * c / aligned};
}

double shape_at(Polarization s, Spin zeta, const ElectronDeformation& d, double c) {
  const LinearShapes lin = linear_shapes(d, c);
  const double total = lin.aligned + lin.crossed;
  switch (s) {
    case Polarization::total: return total;
    case Polarization::sigma: return zeta == Spin::down ? lin.aligned : lin.crossed;
    case Polarization::pi: return zeta == Spin::down ? lin.crossed : lin.aligned;
    case Polarization::right:
    case Polarization::left: return 0.5 * total + label(s) * (1.0 + d.x) * c;
  }
  return std::numeric_limits<double>::quiet_NaN();
}

bool ambiguous_point(const Speed& speed, double theta) {
  return speed.is_limit() && cos_theta(theta) == 0.0;
}

void require_unambiguous(const Speed& speed, double theta) {
  if (ambiguous_point(speed, theta)) {
    throw AmbiguousLimitError(
        "electron quantity at beta = 1, theta = pi/2 depends on the order of limits");
  }
}

}  // namespace

ElectronDeformation electron_deformation(const Speed& speed, double theta) {
  check_theta(theta);
  const double b2 = speed.beta2();
  const double r0 = std::sqrt(speed.inv_gamma2());
  const double c = cos_theta(theta);
  const double sn = std::sin(theta);
  // sqrt(1 - beta^2 sin^2) written as sqrt(1/gamma^2 + beta^2 cos^2)
  const double r = std::sqrt(speed.inv_gamma2() + b2 * c * c);
  return {
      b2 / ((1.0 + r0) * (1.0 + r0)),
      b2 * sn * sn / ((1.0 + r) * (1.0 + r)),
      2.0 * r0 / (1.0 + r0),
      2.0 * r / (1.0 + r),
  };
}

SpinChannel spin_channel(Spin zeta) { return {zeta, zeta == Spin::up}; }

double spin_factor(Spin zeta, const Speed& speed) {
  if (zeta == Spin::down) return 1.0;
  return electron_deformation(speed, 0.0).x0;
}

ElectronRadiation::ElectronRadiation(const Speed& speed, const QuadratureConfig& cfg)
    : speed_(speed), x0_(electron_deformation(speed, 0.0).x0) {
  f1_ = f_e(1, x0_, cfg);
  f2_ = f_e(2, x0_, cfg);
  f0_ = f2_ + f_e(3, x0_, cfg);
}

ElectronDeformation ElectronRadiation::deformation(double theta) const {
  return electron_deformation(speed_, theta);
}

bool ElectronRadiation::is_ambiguous(double theta) const {
  check_theta(theta);
  return ambiguous_point(speed_, theta);
}

double ElectronRadiation::shape(Polarization s, Spin zeta, double theta) const {
  return phi_e(s, zeta, speed_, theta);
}

double ElectronRadiation::finite_density(Polarization s, Spin zeta, double theta) const {
  const ElectronDeformation d = deformation(theta);
  const double phi = shape_at(s, zeta, d, cos_theta(theta));
  const double up = 1.0 + d.x;
  const double norm = d.one_minus_x * (1.0 + x0_) * (1.0 + x0_) * f0_;
  return up * up * up * std::exp(-d.x) * phi / norm;
}

double ElectronRadiation::density(Polarization s, Spin zeta, double theta) const {
  check_theta(theta);
  if (speed_.is_limit()) {
    if (cos_theta(theta) == 0.0) return orbit_plane_limit_density(s, zeta);
    return ultrarelativistic_density(s, zeta, theta);
  }
  return finite_density(s, zeta, theta);
}

double ElectronRadiation::local_polarization(Polarization s, Spin zeta, double theta) const {
  return local_polarization_e(s, zeta, speed_, theta);
}

double ElectronRadiation::half_plane_fraction(Polarization s, Spin zeta, HalfPlane half) const {
  if (half == HalfPlane::lower) s = mirrored(s);
  const double q2 = f2_ / f0_;
  const double z = sign(zeta);
  switch (s) {
    case Polarization::total: return 1.0;
    case Polarization::sigma: return (1.0 + z - 2.0 * z * q2) / 2.0;
    case Polarization::pi: return (1.0 - z + 2.0 * z * q2) / 2.0;
    case Polarization::right:
    case Polarization::left: return 0.5 + label(s) * f1_ / f0_;
  }
  return std::numeric_limits<double>::quiet_NaN();
}

double ElectronRadiation::shape_factor() const { return 3.0 * (1.0 + x0_) * f0_ / 8.0; }

ElectronPower ElectronRadiation::total_power(Spin zeta) const {
  const double shape = shape_factor();
  if (speed_.is_limit()) return {std::numeric_limits<double>::infinity(), shape};
  const double b2 = speed_.beta2();
  const double amplitude = b2 * b2 * b2 / speed_.inv_gamma2();
  const double d = zeta == Spin::up ? x0_ : 1.0;
  return {d * amplitude / 6.0 * shape, shape};
}

double phi_e(Polarization s, Spin zeta, const Speed& speed, double theta) {
  const ElectronDeformation d = electron_deformation(speed, theta);
  require_unambiguous(speed, theta);
  return shape_at(s, zeta, d, cos_theta(theta));
}

ElectronPower total_power_e(Spin zeta, const Speed& speed, const QuadratureConfig& cfg) {
  return ElectronRadiation(speed, cfg).total_power(zeta);
}

double half_plane_fraction_e(Polarization s, Spin zeta, const Speed& speed,
                             const QuadratureConfig& cfg, HalfPlane half) {
  return ElectronRadiation(speed, cfg).half_plane_fraction(s, zeta, half);
}

double angular_density_e(Polarization s, Spin zeta, const Speed& speed, double theta,
                         const QuadratureConfig& cfg) {
  return ElectronRadiation(speed, cfg).density(s, zeta, theta);
}

double local_polarization_e(Polarization s, Spin zeta, const Speed& speed, double theta) {
  const ElectronDeformation d = electron_deformation(speed, theta);
  require_unambiguous(speed, theta);
  const double c = cos_theta(theta);
  return shape_at(s, zeta, d, c) / shape_at(Polarization::total, zeta, d, c);
}

double ultrarelativistic_weight(double theta) {
  check_theta(theta);
  const double c = std::abs(cos_theta(theta));
  const double up = 1.0 + c;
  return std::exp(2.0 * c / up) / (up * up * up);
}

double ultrarelativistic_density(Polarization s, Spin /*zeta*/, double theta) {
  const double base = ultrarelativistic_weight(theta) / kLimitNorm;
  const double c = cos_theta(theta);
  const double sgn = c > 0.0 ? 1.0 : (c < 0.0 ? -1.0 : 0.0);
  switch (s) {
    case Polarization::total: return 2.0 * base;
    case Polarization::sigma:
    case Polarization::pi: return base;
    case Polarization::right:
    case Polarization::left: return base * (1.0 + label(s) * sgn);
  }
  return std::numeric_limits<double>::quiet_NaN();
}

double orbit_plane_limit_density(Polarization s, Spin zeta) {
  const double total = 2.0 / kLimitNorm;
  switch (s) {
    case Polarization::total: return total;
    case Polarization::right:
    case Polarization::left: return 0.5 * total;
    case Polarization::sigma: return zeta == Spin::down ? total : 0.0;
    case Polarization::pi: return zeta == Spin::down ? 0.0 : total;
  }
  return std::numeric_limits<double>::quiet_NaN();
}

}  // namespace qsr
