#pragma once

#include "qsr/types.hpp"

namespace qsr {

/// Dimensionless speed beta = v/c, stored together with 1 - beta^2 so that
/// quantities near beta = 1 (gamma >> 1) keep full relative precision.
class Speed {
public:
  /// beta in [0, 1]; beta = 1 is the ultrarelativistic limit.
  static Speed from_beta(double beta);
  /// gamma in [1, +inf]; gamma = +inf maps to beta = 1.
  static Speed from_gamma(double gamma);

  double beta() const noexcept { return beta_; }
  double beta2() const noexcept { return beta_ * beta_; }
  /// 1 - beta^2 = 1 / gamma^2, computed without cancellation.
  double inv_gamma2() const noexcept { return inv_gamma2_; }
  /// +inf at beta = 1.
  double gamma() const noexcept;
  bool is_limit() const noexcept { return inv_gamma2_ == 0.0; }

private:
  Speed(double beta, double inv_gamma2) : beta_(beta), inv_gamma2_(inv_gamma2) {}

  double beta_;
  double inv_gamma2_;
};

/// State of a particle on the n-th level in the absence of motion along the
/// field. field is H / H0 with H0 = m0^2 c^3 / (|e| hbar); +inf when beta = 1.
struct KinematicState {
  Speed speed;
  double beta;
  double gamma;
  double field;
  int level;
};

struct PhotonRequest {
  int harmonic;  // nu, 1 <= nu <= n
  double theta;  // angle to the field, radians
};

/// Effective level nbar: n for the electron, n + 1/2 for the boson.
double effective_level(Particle kind, int level);

/// gamma^2 = 1 + (2n+1) B (boson) or 1 + 2 n B (electron).
KinematicState state_from_field(const ParticleSpec& spec, int level, double field);

/// Inverse of state_from_field. beta = 1 gives field = +inf.
KinematicState state_from_beta(const ParticleSpec& spec, int level, double beta);

/// Photon energy hbar omega / (m0 c^2) of harmonic nu emitted at angle theta.
double photon_frequency(const ParticleSpec& spec, const KinematicState& state,
                        const PhotonRequest& request);

}  // namespace qsr

namespace qsr {

/// cos(theta) for theta in [0, pi], returning exactly 0 at theta == pi/2 so
/// that orbit-plane special values are reproduced without rounding residue.
double cos_theta(double theta);

/// Throws DomainError unless 0 <= theta <= pi.
void check_theta(double theta);

}  // namespace qsr
