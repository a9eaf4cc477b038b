#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "qsr/boson.hpp"
#include "qsr/errors.hpp"
#include "qsr/quadrature.hpp"
#include "qsr/special_integrals.hpp"

using namespace qsr;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = kPi / 2;
constexpr Polarization kAll[] = {Polarization::total, Polarization::right, Polarization::left,
                                 Polarization::sigma, Polarization::pi};

Speed speed(double beta) { return Speed::from_beta(beta); }

double theta_at(int i, int n, double hi) { return hi * i / (n - 1.0); }

// 2 * int_0^{pi/2} p_s sin(theta) d(theta)
double upper_half(const BosonRadiation& r, Polarization s) {
  return 2.0 * quad_adaptive([&](double t) { return r.density(s, t) * std::sin(t); }, 0.0, kHalfPi,
                             {1e-13, 1e-13, 60});
}

}  // namespace

TEST_CASE("deformation examples and bounds") {
  CHECK(boson_deformation(speed(1.0), kHalfPi).xbar0 ==
        doctest::Approx(2.0 - std::sqrt(3.0)).epsilon(1e-14));
  CHECK(std::abs(boson_deformation(speed(1.0), 1.0).xbar0 - 0.26794919) < 1e-8);
  const auto rest = boson_deformation(speed(0.0), 1.0);
  CHECK(rest.xbar0 == 0.0);
  CHECK(rest.xbar == 0.0);
  CHECK(boson_deformation(speed(0.7), 0.0).xbar == 0.0);

  // closed form (sqrt3 - sqrt(3 - 2 b^2)) / (sqrt3 + sqrt(3 - 2 b^2))
  for (double b : {0.1, 0.5, 0.9, 0.999}) {
    const double r = std::sqrt(3.0 - 2.0 * b * b);
    CHECK(boson_deformation(speed(b), kHalfPi).xbar0 ==
          doctest::Approx((std::sqrt(3.0) - r) / (std::sqrt(3.0) + r)).epsilon(1e-13));
  }
  for (int i = 0; i <= 20; ++i) {
    for (int j = 0; j < 37; ++j) {
      const auto d = boson_deformation(speed(i / 20.0), theta_at(j, 37, kPi));
      CHECK(d.xbar >= 0.0);
      CHECK(d.xbar <= d.xbar0);
      CHECK(d.xbar0 <= 2.0 - std::sqrt(3.0) + 1e-15);
    }
  }
  CHECK_THROWS_AS(boson_deformation(speed(0.5), 4.0), DomainError);
}

TEST_CASE("shape function examples") {
  const Speed v = speed(0.8);
  const double x0 = boson_deformation(v, kHalfPi).xbar0;
  CHECK(phi_b(Polarization::pi, v, kHalfPi) == 0.0);
  CHECK(phi_b(Polarization::sigma, v, kHalfPi) == doctest::Approx(1.0 - x0).epsilon(1e-14));
  for (double th : {0.0, 0.4, 1.3, 2.9}) {
    const double c = std::cos(th);
    CHECK(phi_b(Polarization::total, speed(0.0), th) == doctest::Approx(1.0 + c * c).epsilon(1e-14));
  }
  for (double th : {0.0, 0.3, 1.1, kHalfPi, 2.0, kPi}) {
    const double p0 = phi_b(Polarization::total, v, th);
    CHECK(phi_b(Polarization::sigma, v, th) + phi_b(Polarization::pi, v, th) ==
          doctest::Approx(p0).epsilon(1e-14));
    CHECK(phi_b(Polarization::right, v, th) + phi_b(Polarization::left, v, th) ==
          doctest::Approx(p0).epsilon(1e-14));
  }
}

TEST_CASE("shape factor against tabulated values") {
  CHECK(total_power_b(speed(0.0)).shape == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(total_power_b(speed(0.5)).shape - 1.04423) < 1.5e-5);
  CHECK(std::abs(total_power_b(speed(1.0)).shape - 1.22085) < 1.5e-5);
}

TEST_CASE("total power") {
  const double b = 0.5;
  const BosonRadiation r(speed(b));
  const double A = std::pow(b, 6) / (1.0 - b * b);
  CHECK(r.total_power().power == doctest::Approx(4.0 * A / 81.0 * r.shape_factor()).epsilon(1e-14));
  const auto limit = total_power_b(speed(1.0));
  CHECK(std::isinf(limit.power));
  CHECK(std::isfinite(limit.shape));
  CHECK(total_power_b(speed(0.0)).power == 0.0);
}

TEST_CASE("half-plane fractions") {
  const Speed rest = speed(0.0);
  CHECK(half_plane_fraction_b(Polarization::sigma, rest) == doctest::Approx(0.75).epsilon(1e-10));
  CHECK(half_plane_fraction_b(Polarization::right, rest) ==
        doctest::Approx((4.0 + 3.0) / 8.0).epsilon(1e-10));
  CHECK(half_plane_fraction_b(Polarization::left, rest) ==
        doctest::Approx((4.0 - 3.0) / 8.0).epsilon(1e-10));
  CHECK(half_plane_fraction_b(Polarization::total, rest) == 1.0);

  const BosonRadiation r(speed(0.7));
  CHECK(r.half_plane_fraction(Polarization::sigma) + r.half_plane_fraction(Polarization::pi) ==
        doctest::Approx(1.0).epsilon(1e-15));
  CHECK(r.half_plane_fraction(Polarization::right) + r.half_plane_fraction(Polarization::left) ==
        doctest::Approx(1.0).epsilon(1e-15));
  CHECK(r.half_plane_fraction(Polarization::right, HalfPlane::lower) ==
        r.half_plane_fraction(Polarization::left));
  CHECK(r.half_plane_fraction(Polarization::sigma, HalfPlane::lower) ==
        r.half_plane_fraction(Polarization::sigma));
}

TEST_CASE("density examples") {
  CHECK(angular_density_b(Polarization::pi, speed(0.9), kHalfPi) == 0.0);
  CHECK(angular_density_b(Polarization::total, speed(0.0), 0.0) == doctest::Approx(0.75).epsilon(1e-12));
  for (double b : {0.0, 0.5, 0.99, 1.0}) {
    CHECK(angular_density_b(Polarization::left, speed(b), 0.0) == doctest::Approx(0.0));
  }
  // orbit-plane values: p_0 = p_2 = 2 p_g = (1 - x0^2) / (e^{x0} f_0)
  const Speed v = speed(0.9);
  const BosonRadiation r(v);
  const double x0 = r.xbar0();
  const double expected = (1.0 - x0 * x0) / (std::exp(x0) * f_b(0, x0));
  CHECK(r.density(Polarization::total, kHalfPi) == doctest::Approx(expected).epsilon(1e-10));
  CHECK(r.density(Polarization::sigma, kHalfPi) == doctest::Approx(expected).epsilon(1e-10));
  CHECK(r.density(Polarization::right, kHalfPi) == doctest::Approx(expected / 2).epsilon(1e-10));
  // on the axis: p_0 = p_1 = 2 p_2 = 2 p_3 = 2 / ((1 + x0)^2 f_0)
  const double axis = 2.0 / ((1.0 + x0) * (1.0 + x0) * f_b(0, x0));
  CHECK(r.density(Polarization::total, 0.0) == doctest::Approx(axis).epsilon(1e-10));
  CHECK(r.density(Polarization::right, 0.0) == doctest::Approx(axis).epsilon(1e-10));
  CHECK(r.density(Polarization::sigma, 0.0) == doctest::Approx(axis / 2).epsilon(1e-10));
  CHECK(r.density(Polarization::pi, 0.0) == doctest::Approx(axis / 2).epsilon(1e-10));
}

TEST_CASE("local polarization examples") {
  for (double b : {0.2, 0.9, 1.0}) {
    const Speed v = speed(b);
    CHECK(local_polarization_b(Polarization::sigma, v, 0.0) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(local_polarization_b(Polarization::right, v, 0.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(local_polarization_b(Polarization::left, v, 0.0) == doctest::Approx(0.0));
    CHECK(local_polarization_b(Polarization::sigma, v, kHalfPi) == 1.0);
    CHECK(local_polarization_b(Polarization::right, v, kHalfPi) == doctest::Approx(0.5).epsilon(1e-14));
    for (double th : {0.3, 1.0, 2.5}) {
      CHECK(local_polarization_b(Polarization::sigma, v, th) +
                local_polarization_b(Polarization::pi, v, th) ==
            doctest::Approx(1.0).epsilon(1e-14));
      CHECK(local_polarization_b(Polarization::right, v, th) +
                local_polarization_b(Polarization::left, v, th) ==
            doctest::Approx(1.0).epsilon(1e-14));
    }
  }
}

TEST_CASE("normalization and half-plane consistency") {
  for (double b : {0.0, 0.3, 0.7, 0.9, 1.0}) {
    const BosonRadiation r(speed(b));
    const double total = quad_adaptive(
        [&](double t) { return r.density(Polarization::total, t) * std::sin(t); }, 0.0, kPi,
        {1e-13, 1e-13, 60});
    CHECK(std::abs(total - 1.0) < 1e-8);
    for (auto s : {Polarization::right, Polarization::left, Polarization::sigma, Polarization::pi}) {
      CHECK(std::abs(upper_half(r, s) - r.half_plane_fraction(s)) < 1e-8);
    }
  }
}

TEST_CASE("reflection symmetry and decompositions on a grid") {
  for (double b : {0.3, 0.8, 1.0}) {
    const BosonRadiation r(speed(b));
    for (int j = 0; j < 181; ++j) {
      const double th = theta_at(j, 181, kPi);
      const double mirror = kPi - th;
      for (auto s : {Polarization::total, Polarization::sigma, Polarization::pi}) {
        CHECK(r.density(s, th) == doctest::Approx(r.density(s, mirror)).epsilon(1e-13));
      }
      CHECK(r.density(Polarization::right, th) ==
            doctest::Approx(r.density(Polarization::left, mirror)).epsilon(1e-13));
      const double p0 = r.density(Polarization::total, th);
      CHECK(r.density(Polarization::sigma, th) + r.density(Polarization::pi, th) ==
            doctest::Approx(p0).epsilon(1e-13));
      CHECK(r.density(Polarization::right, th) + r.density(Polarization::left, th) ==
            doctest::Approx(p0).epsilon(1e-13));
    }
  }
}

TEST_CASE("monotonicity on a 1 degree grid") {
  for (double b : {0.1, 0.5, 0.8, 0.95, 1.0}) {
    const BosonRadiation r(speed(b));
    for (int j = 1; j < 91; ++j) {
      const double a = theta_at(j - 1, 181, kPi), c = theta_at(j, 181, kPi);
      CHECK(r.density(Polarization::sigma, c) >= r.density(Polarization::sigma, a) - 1e-15);
      CHECK(r.density(Polarization::right, c) <= r.density(Polarization::right, a) + 1e-15);
      CHECK(r.density(Polarization::total, c) <= r.density(Polarization::total, a) + 1e-15);
    }
  }
  std::vector<BosonRadiation> rows;
  for (int i = 0; i <= 10; ++i) rows.emplace_back(speed(i / 10.0));
  for (int j = 0; j < 181; ++j) {
    const double th = theta_at(j, 181, kPi);
    for (std::size_t i = 1; i < rows.size(); ++i) {
      CHECK(rows[i].density(Polarization::sigma, th) <=
            rows[i - 1].density(Polarization::sigma, th) + 1e-15);
    }
  }
}

TEST_CASE("beta = 1 is a regular point") {
  // one-sided difference quotients settle as the step shrinks
  using Fn = double (*)(double);
  const Fn functions[] = {
      [](double b) { return total_power_b(Speed::from_beta(b)).shape; },
      [](double b) { return half_plane_fraction_b(Polarization::sigma, Speed::from_beta(b)); },
      [](double b) { return half_plane_fraction_b(Polarization::right, Speed::from_beta(b)); },
  };
  for (Fn fn : functions) {
    auto quotient = [fn](double h) { return (fn(1.0) - fn(1.0 - h)) / h; };
    const double d2 = quotient(1e-2), d3 = quotient(1e-3), d4 = quotient(1e-4);
    CHECK(std::isfinite(d4));
    CHECK(std::abs(d4 - d3) < std::abs(d3 - d2));
    CHECK(std::abs(d4 - d3) < 1e-2 * std::max(1.0, std::abs(d4)));
  }
  for (auto s : kAll) {
    CHECK(std::isfinite(angular_density_b(s, speed(1.0), 0.7)));
  }
}
