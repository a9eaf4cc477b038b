#include "qsr/kinematics.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "qsr/errors.hpp"

namespace qsr {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require(bool ok, const char* what) {
  if (!ok) throw DomainError(what);
}

// 2n+1 for bosons, 2n for electrons.
double level_coefficient(Particle kind, int level) {
  return kind == Particle::boson ? 2.0 * level + 1.0 : 2.0 * level;
}

}  // namespace

Speed Speed::from_beta(double beta) {
  require(std::isfinite(beta) && beta >= 0.0 && beta <= 1.0, "beta must lie in [0, 1]");
  return Speed(beta, (1.0 - beta) * (1.0 + beta));
}

Speed Speed::from_gamma(double gamma) {
  require(!std::isnan(gamma) && gamma >= 1.0, "gamma must be >= 1");
  if (std::isinf(gamma)) return Speed(1.0, 0.0);
  const double inv = 1.0 / (gamma * gamma);
  return Speed(std::sqrt(1.0 - inv), inv);
}

double Speed::gamma() const noexcept {
  return is_limit() ? kInf : 1.0 / std::sqrt(inv_gamma2_);
}

double effective_level(Particle kind, int level) {
  return kind == Particle::boson ? level + 0.5 : static_cast<double>(level);
}

KinematicState state_from_field(const ParticleSpec& spec, int level, double field) {
  require(level >= 0, "level must be a nonnegative integer");
  require(std::isfinite(field) && field >= 0.0, "field must be finite and >= 0");
  const double gamma = std::sqrt(1.0 + level_coefficient(spec.kind(), level) * field);
  const Speed speed = Speed::from_gamma(gamma);
  return {speed, speed.beta(), gamma, field, level};
}

KinematicState state_from_beta(const ParticleSpec& spec, int level, double beta) {
  require(level >= 0, "level must be a nonnegative integer");
  const Speed speed = Speed::from_beta(beta);
  const double c = level_coefficient(spec.kind(), level);
  double field = 0.0;
  if (beta > 0.0) {
    require(c > 0.0, "an electron on level 0 cannot move");
    // B = (gamma^2 - 1) / c = beta^2 / (c (1 - beta^2))
    field = speed.is_limit() ? kInf : speed.beta2() / (c * speed.inv_gamma2());
  }
  return {speed, speed.beta(), speed.gamma(), field, level};
}

double photon_frequency(const ParticleSpec& spec, const KinematicState& state,
                        const PhotonRequest& request) {
  require(request.harmonic >= 1, "harmonic must be >= 1");
  require(request.harmonic <= state.level, "harmonic exceeds the level: not radiated");
  check_theta(request.theta);

  const Speed& v = state.speed;
  const double ratio = request.harmonic / effective_level(spec.kind(), state.level);
  const double c = cos_theta(request.theta);
  // 1 - ratio beta^2 sin^2 = (1 - ratio) + ratio (1/gamma^2 + beta^2 cos^2)
  const double radicand = (1.0 - ratio) + ratio * (v.inv_gamma2() + v.beta2() * c * c);
  if (v.is_limit()) return kInf;
  return ratio * v.gamma() * v.beta2() / (1.0 + std::sqrt(radicand));
}

}  // namespace qsr

namespace qsr {

void check_theta(double theta) {
  if (!(theta >= 0.0 && theta <= std::numbers::pi)) throw DomainError("theta must lie in [0, pi]");
}

double cos_theta(double theta) {
  return theta == std::numbers::pi / 2.0 ? 0.0 : std::cos(theta);
}

}  // namespace qsr
