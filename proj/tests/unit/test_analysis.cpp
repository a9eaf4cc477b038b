#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "qsr/analysis.hpp"
#include "qsr/electron.hpp"
#include "qsr/errors.hpp"
#include "table1_golden.hpp"

using namespace qsr;

namespace {

constexpr double kHalfPi = std::numbers::pi / 2;

Speed speed(double beta) { return Speed::from_beta(beta); }

// Unnormalized electron p_0 written out from the deformation formulas.
double electron_p0_shape(double gamma, double theta) {
  const double ig2 = 1.0 / (gamma * gamma);
  const double b2 = 1.0 - ig2;
  const double c = std::cos(theta), s = std::sin(theta);
  const double r = std::sqrt(ig2 + b2 * c * c);
  const double x = b2 * s * s / ((1.0 + r) * (1.0 + r));
  const double x0 = (gamma - 1.0) / (gamma + 1.0);
  const double aligned = 1.0 - x0 * x;
  const double phi0 = aligned + (1.0 + x) * (1.0 + x) * c * c / aligned;
  return std::pow(1.0 + x, 3) * std::exp(-x) * phi0 / (1.0 - x);
}

double slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= xs.size();
  my /= ys.size();
  double num = 0, den = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    num += (xs[i] - mx) * (ys[i] - my);
    den += (xs[i] - mx) * (xs[i] - mx);
  }
  return num / den;
}

}  // namespace

TEST_CASE("power ratio examples") {
  CHECK(std::abs(power_ratio(Spin::down, speed(0.9)) - 3.78977) < 1.5e-5);
  CHECK(std::abs(power_ratio(Spin::up, speed(0.9)) - 1.48887) < 1.5e-5);
  CHECK(std::abs(power_ratio(Spin::down, speed(1.0)) - 3.71695) < 1.5e-5);
  CHECK(power_ratio(Spin::up, speed(1.0)) == power_ratio(Spin::down, speed(1.0)));
  CHECK(power_ratio(Spin::down, speed(0.0)) == doctest::Approx(27.0 / 8.0).epsilon(1e-12));
  CHECK(power_ratio(Spin::up, speed(0.0)) == 0.0);
}

TEST_CASE("table rows agree with the printed values or, where flagged, with the oracle") {
  const auto rows = table1();
  REQUIRE(rows.size() == 11);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& g = golden::kTable1[i];
    const auto& r = rows[i];
    CAPTURE(g.beta);
    CHECK(r.beta == doctest::Approx(g.beta).epsilon(1e-15));
    CHECK(golden::inconsistent(g) == g.suspect);
    if (!g.suspect) {
      CHECK(std::abs(r.f_b - g.f_b) < golden::kPrintedTolerance);
      CHECK(std::abs(r.f_e - g.f_e) < golden::kPrintedTolerance);
      CHECK(std::abs(r.k_minus - g.k_minus) < golden::kPrintedTolerance);
      CHECK(std::abs(r.k_plus - g.k_plus) < golden::kPrintedTolerance);
    } else {
      const auto o = oracle::ratio_row(g.beta);
      CHECK(std::abs(r.f_b - o.f_b) < golden::kOracleTolerance);
      CHECK(std::abs(r.f_e - o.f_e) < golden::kOracleTolerance);
      CHECK(std::abs(r.k_minus - o.k_minus) < golden::kOracleTolerance);
      CHECK(std::abs(r.k_plus - o.k_plus) < golden::kOracleTolerance);
      // the printed ratio columns are still right; the shape factors are not
      CHECK(std::abs(r.k_minus - g.k_minus) < golden::kPrintedTolerance);
    }
    if (r.beta > 0.0) {
      const double x0 = electron_deformation(speed(r.beta), kHalfPi).x0;
      CHECK(r.k_minus / r.k_plus == doctest::Approx(1.0 / x0).epsilon(1e-12));
    }
  }
}

TEST_CASE("k(-1) stays above 27/8 and exceeds 3.717 near beta = 0.98") {
  double kmin = 1e9, kmax = 0.0, argmax = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double b = i / 1000.0;
    const double k = power_ratio(Spin::down, speed(b));
    kmin = std::min(kmin, k);
    if (k > kmax) {
      kmax = k;
      argmax = b;
    }
  }
  CHECK(kmin >= 27.0 / 8.0 - 1e-12);
  CHECK(kmax > 3.9);
  CHECK(argmax == doctest::Approx(0.984).epsilon(0.01));
  const auto o = oracle::ratio_row(0.9);
  CHECK(std::abs(power_ratio(Spin::down, speed(0.9)) - o.k_minus) < 1e-7);
  CHECK(o.k_minus > 3.717);
}

TEST_CASE("crossover") {
  const Crossover c = crossover_beta();
  CHECK(std::abs(c.beta0 - 0.8199913) < 1e-7);
  CHECK(std::abs(c.gamma0 - 1.7471034) < 1e-6);
  CHECK(std::abs(power_ratio(Spin::up, speed(c.beta0)) - 1.0) < 1e-7);

  int changes = 0;
  double prev = power_ratio(Spin::up, speed(0.0)) - 1.0;
  for (int i = 1; i < 400; ++i) {
    const double cur = power_ratio(Spin::up, speed(i / 400.0)) - 1.0;
    if ((cur < 0) != (prev < 0)) ++changes;
    prev = cur;
  }
  CHECK(changes == 1);
}

TEST_CASE("maximum angle examples") {
  CHECK_FALSE(max_angle(Particle::electron, Polarization::pi, Spin::down, speed(0.5)).exists);
  const auto low = max_angle(Particle::electron, Polarization::total, Spin::down, speed(0.6));
  CHECK_FALSE(low.exists);
  CHECK_FALSE(low.theta_max.has_value());

  const double gamma = 30.0;
  const auto rep = max_angle(Particle::electron, Polarization::total, Spin::down, Speed::from_gamma(gamma));
  REQUIRE(rep.exists);
  const double offset = kHalfPi - *rep.theta_max;
  CHECK(std::abs(offset - 2.0 / (gamma * gamma)) < 0.25 * 2.0 / (gamma * gamma));

  // brute-force maximization of the unnormalized density
  const auto [where, value] = oracle::grid_max([gamma](double t) { return electron_p0_shape(gamma, t); },
                                               kHalfPi - 0.01, kHalfPi, 200001);
  (void)value;
  CHECK(std::abs(*rep.theta_max - where) < 2e-7);
  CHECK(std::abs((kHalfPi - where) - 2.0 / (gamma * gamma)) < 0.25 * 2.0 / (gamma * gamma));

  CHECK_THROWS_AS(max_angle(Particle::electron, Polarization::left, Spin::down, speed(0.9)), DomainError);
}

TEST_CASE("the maximum is bracketed by lower neighbours") {
  for (double b : {0.9, 0.95, 0.99}) {
    for (auto s : {Polarization::total, Polarization::right, Polarization::pi}) {
      const auto rep = max_angle(Particle::electron, s, Spin::down, speed(b));
      REQUIRE(rep.exists);
      const double t = *rep.theta_max;
      const double h = 1e-3 * (kHalfPi - t);
      const double p = angular_density(Particle::electron, s, Spin::down, speed(b), t);
      CHECK(p >= angular_density(Particle::electron, s, Spin::down, speed(b), t - h));
      CHECK(p >= angular_density(Particle::electron, s, Spin::down, speed(b), t + h));
      CHECK(rep.p_max == doctest::Approx(p).epsilon(1e-12));
    }
  }
}

TEST_CASE("asymptotic maximum angles") {
  CHECK(asymptotic_max_angle(Polarization::total, 10.0) == doctest::Approx(kHalfPi - 0.02).epsilon(1e-15));
  CHECK(asymptotic_max_angle(Polarization::right, 10.0) ==
        doctest::Approx(kHalfPi - std::cbrt(1.0 / 200.0)).epsilon(1e-15));
  CHECK(asymptotic_max_angle(Polarization::pi, 100.0) == doctest::Approx(kHalfPi - 0.1).epsilon(1e-15));
  CHECK_THROWS_AS(asymptotic_max_angle(Polarization::sigma, 10.0), DomainError);
  CHECK_THROWS_AS(asymptotic_max_angle(Polarization::total, 1.0), DomainError);
}

TEST_CASE("scaling exponents of the maximum angle") {
  const std::vector<double> gammas{20.0, 40.0, 80.0};
  const std::pair<Polarization, double> cases[] = {
      {Polarization::total, -2.0}, {Polarization::right, -2.0 / 3.0}, {Polarization::pi, -0.5}};
  for (const auto& [s, expected] : cases) {
    std::vector<double> lx, ly;
    for (double g : gammas) {
      const auto rep = max_angle(Particle::electron, s, Spin::down, Speed::from_gamma(g));
      REQUIRE(rep.exists);
      lx.push_back(std::log(g));
      ly.push_back(std::log(kHalfPi - *rep.theta_max));
    }
    CHECK(std::abs(slope(lx, ly) - expected) < 0.15 * std::abs(expected));
  }
}

TEST_CASE("thresholds for an interior maximum") {
  auto exists = [](Polarization s, double beta2) {
    return max_angle(Particle::electron, s, Spin::down, speed(std::sqrt(beta2))).exists;
  };
  for (auto s : {Polarization::total, Polarization::right}) {
    CHECK_FALSE(exists(s, 0.45));
    CHECK(exists(s, 0.55));
  }
  CHECK_FALSE(exists(Polarization::pi, 0.70));
  CHECK(exists(Polarization::pi, 0.80));
}

TEST_CASE("no divergent peaking as beta -> 1") {
  const auto rep = max_angle(Particle::electron, Polarization::total, Spin::down, speed(0.99));
  CHECK(rep.p_max < 2.0);
  CHECK(rep.p_max > 0.0);
}

TEST_CASE("effective angle of the resting boson has a closed form") {
  // p_0 = 3/8 (1 + cos^2): Delta^2 = pi^2/4 - 17/9
  const auto rep = effective_angle(Particle::boson, Polarization::total, Spin::down, speed(0.0));
  CHECK(rep.delta == doctest::Approx(std::sqrt(std::numbers::pi * std::numbers::pi / 4 - 17.0 / 9.0))
                         .epsilon(1e-10));
  CHECK(rep.definition_id == "rms");
  CHECK_FALSE(rep.zeta.has_value());
  // the same moment by Simpson's rule
  const double m = oracle::simpson(
      [](double t) {
        const double c = std::cos(t);
        return (t - kHalfPi) * (t - kHalfPi) * 0.375 * (1.0 + c * c) * std::sin(t);
      },
      0.0, std::numbers::pi, 20000);
  CHECK(rep.delta == doctest::Approx(std::sqrt(m)).epsilon(1e-10));
}

TEST_CASE("effective angle trends") {
  using enum EffectiveAngleDefinition;
  for (Particle kind : {Particle::boson, Particle::electron}) {
    auto delta = [kind](Polarization s, double b, EffectiveAngleDefinition d) {
      return effective_angle(kind, s, Spin::down, speed(b), {}, d).delta;
    };
    // total component narrows weakly
    CHECK(delta(Polarization::total, 0.9, rms) < delta(Polarization::total, 0.1, rms));
    // pi component: widens under the equivalent-width convention
    CHECK(delta(Polarization::pi, 0.6, equivalent_width) > delta(Polarization::pi, 0.3, equivalent_width));
    CHECK(delta(Polarization::pi, 0.9, equivalent_width) > delta(Polarization::pi, 0.6, equivalent_width));
    // and narrows under rms
    CHECK(delta(Polarization::pi, 0.9, rms) < delta(Polarization::pi, 0.3, rms));
  }
  CHECK(effective_angle(Particle::electron, Polarization::pi, Spin::up, speed(0.5), {}, equivalent_width)
            .definition_id == "equivalent_width");
  CHECK(parse_effective_angle_definition("rms") == rms);
  CHECK_THROWS_AS(parse_effective_angle_definition("fwhm"), DomainError);
}
