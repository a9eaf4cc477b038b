#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qsr/kinematics.hpp"
#include "qsr/quadrature.hpp"
#include "qsr/types.hpp"

namespace qsr {

/// One row of the electron/boson power comparison at equal gamma and n = 1.
struct RatioRow {
  double beta;
  double f_b;
  double f_e;
  double k_minus;  // k(-1; beta) = 27/8 f^e / f^b
  double k_plus;   // k(+1; beta) = x0(beta) k(-1; beta)
};

struct Crossover {
  double beta0;
  double gamma0;
};

/// Result of the search for an interior maximum of p_s on (0, pi/2).
struct ExtremumReport {
  Particle kind;
  Polarization s;
  std::optional<Spin> zeta;
  double beta;
  bool exists;
  std::optional<double> theta_max;  // set iff exists
  double p_max;                     // sup of p_s over [0, pi/2]
};

/// Width conventions for the effective angle about the orbit plane.
enum class EffectiveAngleDefinition {
  /// Delta^2 = int (theta - pi/2)^2 p_s dOmega / int p_s dOmega.
  rms,
  /// Delta = int p_s dOmega / (2 max p_s): half-width of the rectangle with
  /// the same peak and the same power.
  equivalent_width,
};

struct EffectiveAngleReport {
  Particle kind;
  Polarization s;
  std::optional<Spin> zeta;
  double beta;
  double delta;
  std::string definition_id;
};

std::string_view to_string(EffectiveAngleDefinition def) noexcept;
EffectiveAngleDefinition parse_effective_angle_definition(std::string_view text);

/// W_0^e(zeta) / W_0^b at equal gamma.
double power_ratio(Spin zeta, const Speed& speed, const QuadratureConfig& cfg = {});

RatioRow ratio_row(const Speed& speed, const QuadratureConfig& cfg = {});

/// Speed at which a spin-flip electron starts to outshine the boson,
/// k(+1; beta0) = 1, by bisection on [0.5, 0.95].
Crossover crossover_beta(const QuadratureConfig& cfg = {}, double tol = 1e-10);

/// Rows for beta = 0.0, 0.1, ..., 1.0.
std::vector<RatioRow> table1(const QuadratureConfig& cfg = {});

/// Angular density p_s for either particle (zeta ignored for the boson).
double angular_density(Particle kind, Polarization s, Spin zeta, const Speed& speed, double theta,
                       const QuadratureConfig& cfg = {});

/// Interior maximum of p_s over (0, pi/2) for s in {0, 1, 2, 3}.
///
/// A 361-point scan decides existence: an interior maximum is declared only if
/// some point strictly inside the interval beats both endpoint values by more
/// than 1e-12. When the scan peaks at pi/2 the neighbourhood of the endpoint is
/// probed on a geometric grid, since maxima approach pi/2 like 1/gamma^2.
/// The location is then refined by golden-section search.
ExtremumReport max_angle(Particle kind, Polarization s, Spin zeta, const Speed& speed,
                         const QuadratureConfig& cfg = {});

/// Large-gamma approximation of the maximum location for s in {0, 1, 3}.
double asymptotic_max_angle(Polarization s, double gamma);

EffectiveAngleReport effective_angle(Particle kind, Polarization s, Spin zeta, const Speed& speed,
                                     const QuadratureConfig& cfg = {},
                                     EffectiveAngleDefinition def = EffectiveAngleDefinition::rms);

}  // namespace qsr
