#include "qsr/analysis.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <memory>
#include <numbers>

#include "qsr/boson.hpp"
#include "qsr/electron.hpp"
#include "qsr/errors.hpp"
#include "qsr/optimize.hpp"

namespace qsr {
namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;
constexpr int kScanIntervals = 360;
constexpr double kInteriorMargin = 1e-12;

using Profile = std::function<double(double)>;

// p_s(theta) at fixed speed with the normalization computed once.
Profile density_profile(Particle kind, Polarization s, Spin zeta, const Speed& speed,
                        const QuadratureConfig& cfg) {
  if (kind == Particle::boson) {
    auto rad = std::make_shared<const BosonRadiation>(speed, cfg);
    return [rad, s](double theta) { return rad->density(s, theta); };
  }
  auto rad = std::make_shared<const ElectronRadiation>(speed, cfg);
  return [rad, s, zeta](double theta) { return rad->density(s, zeta, theta); };
}

std::optional<Spin> spin_of(Particle kind, Spin zeta) {
  return kind == Particle::electron ? std::optional<Spin>(zeta) : std::nullopt;
}

// Bracket [lo, hi] around an interior maximum that sits closer to pi/2 than
// the scan spacing, or nothing if p(pi/2 - delta) never beats p(pi/2).
std::optional<std::pair<double, double>> probe_orbit_plane(const Profile& p, double spacing,
                                                           double edge_value) {
  double best_delta = 0.0;
  double best_value = edge_value + kInteriorMargin;
  std::array<double, 48> deltas{};
  for (std::size_t k = 0; k < deltas.size(); ++k) {
    deltas[k] = spacing * std::pow(0.5, static_cast<double>(k + 1));
    const double v = p(kHalfPi - deltas[k]);
    if (v > best_value) {
      best_value = v;
      best_delta = deltas[k];
    }
  }
  if (best_delta == 0.0) return std::nullopt;
  return std::make_pair(kHalfPi - std::min(2.0 * best_delta, spacing), kHalfPi - 0.5 * best_delta);
}

double maximum_on(const Profile& p, double lo, double hi, int intervals) {
  const double step = (hi - lo) / intervals;
  int best = 0;
  double best_value = p(lo);
  for (int i = 1; i <= intervals; ++i) {
    const double v = p(lo + i * step);
    if (v > best_value) {
      best_value = v;
      best = i;
    }
  }
  const double a = lo + std::max(best - 1, 0) * step;
  const double b = lo + std::min(best + 1, intervals) * step;
  const Extremum refined = golden_section_maximize(p, a, b, 1e-12);
  return std::max(refined.value, best_value);
}

double integrate_sphere(const std::function<double(double)>& weight, const QuadratureConfig& cfg) {
  auto integrand = [&weight](double theta) { return weight(theta) * std::sin(theta); };
  return quad_adaptive(integrand, 0.0, kHalfPi, cfg) +
         quad_adaptive(integrand, kHalfPi, std::numbers::pi, cfg);
}

}  // namespace

std::string_view to_string(EffectiveAngleDefinition def) noexcept {
  return def == EffectiveAngleDefinition::rms ? "rms" : "equivalent_width";
}

EffectiveAngleDefinition parse_effective_angle_definition(std::string_view text) {
  if (text == "rms") return EffectiveAngleDefinition::rms;
  if (text == "equivalent_width") return EffectiveAngleDefinition::equivalent_width;
  throw DomainError("unknown effective-angle definition '" + std::string(text) + "'");
}

RatioRow ratio_row(const Speed& speed, const QuadratureConfig& cfg) {
  const BosonRadiation boson(speed, cfg);
  const ElectronRadiation electron(speed, cfg);
  const double fb = boson.shape_factor();
  const double fe = electron.shape_factor();
  const double k_minus = 27.0 / 8.0 * fe / fb;
  return {speed.beta(), fb, fe, k_minus, electron.x0() * k_minus};
}

double power_ratio(Spin zeta, const Speed& speed, const QuadratureConfig& cfg) {
  const RatioRow row = ratio_row(speed, cfg);
  return zeta == Spin::up ? row.k_plus : row.k_minus;
}

Crossover crossover_beta(const QuadratureConfig& cfg, double tol) {
  auto excess = [&cfg](double beta) {
    return power_ratio(Spin::up, Speed::from_beta(beta), cfg) - 1.0;
  };
  const double beta0 = bisect(excess, 0.5, 0.95, tol);
  return {beta0, Speed::from_beta(beta0).gamma()};
}

std::vector<RatioRow> table1(const QuadratureConfig& cfg) {
  std::vector<RatioRow> rows;
  rows.reserve(11);
  for (int i = 0; i <= 10; ++i) rows.push_back(ratio_row(Speed::from_beta(i / 10.0), cfg));
  return rows;
}

double angular_density(Particle kind, Polarization s, Spin zeta, const Speed& speed, double theta,
                       const QuadratureConfig& cfg) {
  return density_profile(kind, s, zeta, speed, cfg)(theta);
}

ExtremumReport max_angle(Particle kind, Polarization s, Spin zeta, const Speed& speed,
                         const QuadratureConfig& cfg) {
  if (s == Polarization::left) {
    throw DomainError("maximum search is defined for s in {0, 1, 2, 3}");
  }
  const Profile p = density_profile(kind, s, zeta, speed, cfg);
  ExtremumReport report{kind, s, spin_of(kind, zeta), speed.beta(), false, std::nullopt, 0.0};

  const double spacing = kHalfPi / kScanIntervals;
  std::array<double, kScanIntervals + 1> values{};
  for (int i = 0; i <= kScanIntervals; ++i) values[i] = p(i == kScanIntervals ? kHalfPi : i * spacing);

  const double edge = std::max(values.front(), values.back());
  const auto interior = std::max_element(values.begin() + 1, values.end() - 1);
  report.p_max = std::max(edge, *interior);

  std::optional<std::pair<double, double>> bracket;
  if (*interior > edge + kInteriorMargin) {
    const auto i = static_cast<int>(interior - values.begin());
    bracket = std::make_pair((i - 1) * spacing, std::min((i + 1) * spacing, kHalfPi));
  } else if (values.back() >= values.front()) {
    bracket = probe_orbit_plane(p, spacing, values.back());
  }
  if (!bracket) return report;

  const Extremum peak = golden_section_maximize(p, bracket->first, bracket->second, 1e-13);
  report.exists = true;
  report.theta_max = peak.argument;
  report.p_max = std::max(report.p_max, peak.value);
  return report;
}

double asymptotic_max_angle(Polarization s, double gamma) {
  if (!(gamma > 1.0)) throw DomainError("asymptotic maximum angle needs gamma > 1");
  switch (s) {
    case Polarization::total: return kHalfPi - 2.0 / (gamma * gamma);
    case Polarization::right: return kHalfPi - std::cbrt(1.0 / (2.0 * gamma * gamma));
    case Polarization::pi: return kHalfPi - 1.0 / std::sqrt(gamma);
    default: throw DomainError("asymptotic maximum angle is known for s in {0, 1, 3}");
  }
}

EffectiveAngleReport effective_angle(Particle kind, Polarization s, Spin zeta, const Speed& speed,
                                     const QuadratureConfig& cfg, EffectiveAngleDefinition def) {
  const Profile p = density_profile(kind, s, zeta, speed, cfg);
  const double power = integrate_sphere(p, cfg);
  if (!(power > 0.0)) throw DomainError("component carries no power");

  double delta = 0.0;
  if (def == EffectiveAngleDefinition::rms) {
    auto moment = [&p](double theta) {
      const double d = theta - kHalfPi;
      return d * d * p(theta);
    };
    delta = std::sqrt(integrate_sphere(moment, cfg) / power);
  } else {
    const double peak = std::max(maximum_on(p, 0.0, kHalfPi, kScanIntervals),
                                 maximum_on(p, kHalfPi, std::numbers::pi, kScanIntervals));
    delta = power / (2.0 * peak);
  }
  return {kind, s, spin_of(kind, zeta), speed.beta(), delta, std::string(to_string(def))};
}

}  // namespace qsr
