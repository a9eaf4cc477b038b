#pragma once

#include "qsr/boson.hpp"
#include "qsr/kinematics.hpp"
#include "qsr/quadrature.hpp"
#include "qsr/types.hpp"

namespace qsr {

/// Deformation variables of the electron, 0 <= x <= x0 <= 1, stored with
/// their complements 1 - x0 and 1 - x.
struct ElectronDeformation {
  double x0;
  double x;
  double one_minus_x0;
  double one_minus_x;
};

/// Transition channel. The final state always has spin -1, so an initial
/// spin +1 implies a spin flip.
struct SpinChannel {
  Spin zeta;
  bool flip;
};

struct ElectronPower {
  double power;  // units Q0; +inf at beta = 1
  double shape;  // f^e(beta)
};

ElectronDeformation electron_deformation(const Speed& speed, double theta);

SpinChannel spin_channel(Spin zeta);

/// d(zeta; beta): x0 for a spin-flip transition (zeta = +1), 1 otherwise.
double spin_factor(Spin zeta, const Speed& speed);

/// Angular radiation of a spin-1/2 particle on level n = 1 at fixed speed.
///
/// Circular and total components do not depend on zeta; the sigma and pi
/// components of the two spin states switch places. At beta = 1 densities
/// come from the ultrarelativistic limit functions, and the orbit-plane point
/// theta = pi/2 returns the fixed-beta limit (see is_ambiguous).
class ElectronRadiation {
public:
  explicit ElectronRadiation(const Speed& speed, const QuadratureConfig& cfg = {});

  const Speed& speed() const noexcept { return speed_; }
  double x0() const noexcept { return x0_; }

  ElectronDeformation deformation(double theta) const;

  /// True at (beta = 1, theta = pi/2), where the limits beta -> 1 and
  /// theta -> pi/2 do not commute.
  bool is_ambiguous(double theta) const;

  /// phi_s(zeta; beta; theta). Throws AmbiguousLimitError at the ambiguous point.
  double shape(Polarization s, Spin zeta, double theta) const;

  double density(Polarization s, Spin zeta, double theta) const;

  /// phi_s / phi_0. Throws AmbiguousLimitError at the ambiguous point.
  double local_polarization(Polarization s, Spin zeta, double theta) const;

  double half_plane_fraction(Polarization s, Spin zeta, HalfPlane half = HalfPlane::upper) const;

  /// f^e(beta) = 3 (1 + x0) f_0^e(x0) / 8.
  double shape_factor() const;

  ElectronPower total_power(Spin zeta) const;

private:
  double finite_density(Polarization s, Spin zeta, double theta) const;

  Speed speed_;
  double x0_;
  double f0_;
  double f1_;
  double f2_;
};

double phi_e(Polarization s, Spin zeta, const Speed& speed, double theta);
ElectronPower total_power_e(Spin zeta, const Speed& speed, const QuadratureConfig& cfg = {});
double half_plane_fraction_e(Polarization s, Spin zeta, const Speed& speed,
                             const QuadratureConfig& cfg = {}, HalfPlane half = HalfPlane::upper);
double angular_density_e(Polarization s, Spin zeta, const Speed& speed, double theta,
                         const QuadratureConfig& cfg = {});
double local_polarization_e(Polarization s, Spin zeta, const Speed& speed, double theta);

/// Theta(theta) = (1 + |cos|)^-3 exp(2 |cos| / (1 + |cos|)).
double ultrarelativistic_weight(double theta);

/// Limit of the electron density as beta -> 1 at fixed theta. At theta = pi/2
/// the sign of cos(theta) is taken as 0, giving each circular component half
/// of the total.
double ultrarelativistic_density(Polarization s, Spin zeta, double theta);

/// Values approached at theta = pi/2 as beta -> 1 with theta held fixed
/// first: p_0 = 2/(2e - 3), circular halves, and the spin-dependent linear
/// components.
double orbit_plane_limit_density(Polarization s, Spin zeta);

}  // namespace qsr
