#pragma once

#include "qsr/kinematics.hpp"
#include "qsr/quadrature.hpp"
#include "qsr/types.hpp"

namespace qsr {

enum class HalfPlane { upper, lower };

/// Deformation variables of the spin-0 particle; 0 <= xbar <= xbar0 <= 2 - sqrt(3).
struct BosonDeformation {
  double xbar0;
  double xbar;
};

/// Total power in units Q0 = e^2 m0^2 c^3 / hbar^2 together with the
/// finite shape factor f^b(beta). power is +inf at beta = 1.
struct BosonPower {
  double power;
  double shape;
};

BosonDeformation boson_deformation(const Speed& speed, double theta);

/// Angular radiation of a spin-0 particle on level n = 1 at fixed speed.
///
/// The normalization f_0^b(xbar0) needs a quadrature, so it is computed once
/// at construction and reused by every angular query.
class BosonRadiation {
public:
  explicit BosonRadiation(const Speed& speed, const QuadratureConfig& cfg = {});

  const Speed& speed() const noexcept { return speed_; }
  double xbar0() const noexcept { return xbar0_; }

  BosonDeformation deformation(double theta) const;

  /// Polarization shape function phi_s(beta; theta).
  double shape(Polarization s, double theta) const;

  /// Angular density p_s(beta; theta); integrates to 1 over the sphere for s = 0
  /// with dOmega = sin(theta) dtheta.
  double density(Polarization s, double theta) const;

  /// phi_s / phi_0 at angle theta.
  double local_polarization(Polarization s, double theta) const;

  /// Fraction q_s(beta) of the half-plane power carried by component s.
  double half_plane_fraction(Polarization s, HalfPlane half = HalfPlane::upper) const;

  /// f^b(beta) = 3 (1 + xbar0)^2 f_0^b(xbar0) / 8.
  double shape_factor() const;

  BosonPower total_power() const;

private:
  Speed speed_;
  double xbar0_;
  double f0_;
  double f1_;
  double f2_;
};

double phi_b(Polarization s, const Speed& speed, double theta);
BosonPower total_power_b(const Speed& speed, const QuadratureConfig& cfg = {});
double half_plane_fraction_b(Polarization s, const Speed& speed, const QuadratureConfig& cfg = {},
                             HalfPlane half = HalfPlane::upper);
double angular_density_b(Polarization s, const Speed& speed, double theta,
                         const QuadratureConfig& cfg = {});
double local_polarization_b(Polarization s, const Speed& speed, double theta);

}  // namespace qsr
