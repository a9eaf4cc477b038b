#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "figures.hpp"
#include "grid.hpp"
#include "qsr/analysis.hpp"
#include "qsr/boson.hpp"
#include "qsr/electron.hpp"
#include "qsr/errors.hpp"
#include "qsr/kinematics.hpp"
#include "qsr/scan_result.hpp"

namespace qsr::cli {
namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

struct Options {
  std::string format = "csv";
  std::string unit = "rad";
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  int max_depth = 60;

  std::string quantity;
  std::string particle = "electron";
  int zeta = -1;
  int s = 0;
  std::string beta = "0.9";
  std::string theta = "0:pi:181";
  std::string definition = "rms";
  std::string half = "upper";
  int level = 1;
  int harmonic = 1;

  QuadratureConfig quadrature() const {
    QuadratureConfig cfg{abs_tol, rel_tol, max_depth};
    cfg.validate();
    return cfg;
  }
  bool degrees() const { return unit == "deg"; }
  Particle kind() const { return parse_particle(particle); }
  Spin spin() const { return spin_from_sign(zeta); }
  Polarization label() const { return polarization_from_label(s); }
};

// User-facing angle value together with its radian equivalent.
struct Angle {
  double shown;
  double rad;
};

double to_radians(double value, bool degrees) {
  double rad = degrees ? value * (std::numbers::pi / 180.0) : value;
  // Grid arithmetic can land an ulp or two away from the special angles.
  constexpr double kSnap = 8.0 * std::numeric_limits<double>::epsilon();
  if (std::abs(rad - kHalfPi) <= kSnap * kHalfPi) rad = kHalfPi;
  if (std::abs(rad - std::numbers::pi) <= kSnap * std::numbers::pi) rad = std::numbers::pi;
  if (std::abs(rad) <= kSnap) rad = 0.0;
  return rad;
}

double from_radians(double rad, bool degrees) {
  return degrees ? rad * (180.0 / std::numbers::pi) : rad;
}

std::vector<Angle> theta_grid(const Options& o) {
  std::vector<Angle> grid;
  for (double v : parse_grid(o.theta, o.degrees() ? 180.0 : std::numbers::pi)) {
    const double rad = to_radians(v, o.degrees());
    check_theta(rad);
    grid.push_back({v, rad});
  }
  return grid;
}

std::vector<Speed> beta_grid(const Options& o) {
  std::vector<Speed> grid;
  for (double v : parse_grid(o.beta, std::numbers::pi)) grid.push_back(Speed::from_beta(v));
  return grid;
}

ScanResult base_result(const Options& o, std::string quantity) {
  ScanResult r;
  r.set("tool", "qsr");
  r.set("version", QSR_VERSION);
  r.set("quantity", std::move(quantity));
  return r;
}

void describe_particle(ScanResult& r, const Options& o, bool with_label) {
  r.set("particle", o.particle);
  if (o.kind() == Particle::electron) r.set("zeta", std::to_string(o.zeta));
  if (with_label) r.set("s", std::to_string(o.s));
}

void describe_numerics(ScanResult& r, const Options& o) {
  r.set("angle_unit", o.unit);
  r.set("abs_tol", format_number(o.abs_tol));
  r.set("rel_tol", format_number(o.rel_tol));
  r.set("max_depth", std::to_string(o.max_depth));
}

// ---- quantities on a (beta, theta) grid --------------------------------

ScanResult theta_scan(const Options& o, const std::string& quantity) {
  const QuadratureConfig cfg = o.quadrature();
  ScanResult r = base_result(o, quantity);
  const bool per_label = quantity != "freq";

  if (quantity == "limits") {
    r.set("particle", "electron");
    r.set("s", std::to_string(o.s));
    r.set("beta", "1");
    r.set("note", "beta -> 1 at fixed theta; theta = pi/2 uses the sign(cos) = 0 convention");
    describe_numerics(r, o);
    r.columns = {"theta", "Theta", "value"};
    for (const Angle& a : theta_grid(o)) {
      r.rows.push_back({a.shown, ultrarelativistic_weight(a.rad),
                        ultrarelativistic_density(o.label(), o.spin(), a.rad)});
    }
    return r;
  }

  describe_particle(r, o, per_label);
  if (quantity == "freq") {
    r.set("level", std::to_string(o.level));
    r.set("harmonic", std::to_string(o.harmonic));
    r.set("frequency_unit", "m0 c^2 / hbar");
  }
  describe_numerics(r, o);
  r.columns = {"beta", "theta", "value"};

  const ParticleSpec spec =
      o.kind() == Particle::boson ? ParticleSpec::boson() : ParticleSpec::electron(o.spin());
  const auto thetas = theta_grid(o);
  bool flagged = false;

  for (const Speed& v : beta_grid(o)) {
    std::optional<BosonRadiation> boson;
    std::optional<ElectronRadiation> electron;
    if (quantity == "p") {
      if (o.kind() == Particle::boson) boson.emplace(v, cfg);
      else electron.emplace(v, cfg);
    }

    for (const Angle& a : thetas) {
      Cell cell = 0.0;
      if (quantity == "freq") {
        const KinematicState state = state_from_beta(spec, o.level, v.beta());
        cell = make_cell(photon_frequency(spec, state, {o.harmonic, a.rad}));
      } else if (quantity == "p") {
        if (boson) {
          cell = boson->density(o.label(), a.rad);
        } else {
          flagged = flagged || electron->is_ambiguous(a.rad);
          cell = electron->density(o.label(), o.spin(), a.rad);
        }
      } else if (o.kind() == Particle::boson) {
        cell = local_polarization_b(o.label(), v, a.rad);
      } else {
        try {
          cell = local_polarization_e(o.label(), o.spin(), v, a.rad);
        } catch (const AmbiguousLimitError&) {
          cell = Sentinel::ambiguous;
        }
      }
      r.rows.push_back({v.beta(), a.shown, cell});
    }
  }
  if (flagged) {
    r.set("ambiguous_limit",
          "beta=1, theta=pi/2 reports the fixed-beta theta->pi/2 limit; beta->1 at fixed theta "
          "gives half of p_0");
  }
  return r;
}

// ---- quantities on a beta grid ------------------------------------------

ScanResult beta_scan(const Options& o, const std::string& quantity) {
  const QuadratureConfig cfg = o.quadrature();
  ScanResult r = base_result(o, quantity);
  const Particle kind = o.kind();

  if (quantity == "ratio") {
    r.set("zeta", std::to_string(o.zeta));
  } else {
    describe_particle(r, o, quantity != "power");
  }
  if (quantity == "q_halfplane") r.set("half_plane", o.half);
  if (quantity == "power") r.set("power_unit", "Q0 = e^2 m0^2 c^3 / hbar^2");
  if (quantity == "eff_angle") r.set("definition_id", o.definition);
  describe_numerics(r, o);

  if (quantity == "q_halfplane") {
    r.columns = {"beta", "value"};
  } else if (quantity == "power") {
    r.columns = {"beta", "power", "shape"};
  } else if (quantity == "ratio") {
    r.columns = {"beta", "value"};
  } else if (quantity == "max_angle") {
    r.columns = {"beta", "gamma", "exists", "theta_max", "p_max"};
  } else {
    r.columns = {"beta", "delta"};
  }

  const HalfPlane half = o.half == "lower" ? HalfPlane::lower : HalfPlane::upper;
  for (const Speed& v : beta_grid(o)) {
    if (quantity == "q_halfplane") {
      const double q = kind == Particle::boson
                           ? half_plane_fraction_b(o.label(), v, cfg, half)
                           : half_plane_fraction_e(o.label(), o.spin(), v, cfg, half);
      r.rows.push_back({v.beta(), q});
    } else if (quantity == "power") {
      double power = 0.0;
      double shape = 0.0;
      if (kind == Particle::boson) {
        const BosonPower p = total_power_b(v, cfg);
        power = p.power;
        shape = p.shape;
      } else {
        const ElectronPower p = total_power_e(o.spin(), v, cfg);
        power = p.power;
        shape = p.shape;
      }
      r.rows.push_back({v.beta(), make_cell(power), shape});
    } else if (quantity == "ratio") {
      r.rows.push_back({v.beta(), power_ratio(o.spin(), v, cfg)});
    } else if (quantity == "max_angle") {
      const ExtremumReport rep = max_angle(kind, o.label(), o.spin(), v, cfg);
      // Without an interior maximum, report where the supremum sits on the edge.
      double where = rep.theta_max.value_or(0.0);
      if (!rep.exists) {
        const double at_zero = angular_density(kind, o.label(), o.spin(), v, 0.0, cfg);
        where = at_zero >= rep.p_max ? 0.0 : kHalfPi;
      }
      r.rows.push_back({v.beta(), make_cell(v.gamma()), rep.exists ? 1.0 : 0.0,
                        from_radians(where, o.degrees()), rep.p_max});
    } else {
      const auto def = parse_effective_angle_definition(o.definition);
      const EffectiveAngleReport rep = effective_angle(kind, o.label(), o.spin(), v, cfg, def);
      r.rows.push_back({v.beta(), from_radians(rep.delta, o.degrees())});
    }
  }
  return r;
}

ScanResult table1_result(const Options& o) {
  ScanResult r = base_result(o, "table1");
  describe_numerics(r, o);
  r.columns = {"beta", "f_b", "f_e", "k_minus", "k_plus"};
  for (const RatioRow& row : table1(o.quadrature())) {
    r.rows.push_back({row.beta, row.f_b, row.f_e, row.k_minus, row.k_plus});
  }
  return r;
}

ScanResult crossover_result(const Options& o) {
  ScanResult r = base_result(o, "crossover");
  r.set("definition", "k(+1; beta0) = 1");
  describe_numerics(r, o);
  const Crossover c = crossover_beta(o.quadrature());
  r.columns = {"beta0", "gamma0"};
  r.rows.push_back({c.beta0, c.gamma0});
  return r;
}

ScanResult polarization_result(const Options& o) {
  const QuadratureConfig cfg = o.quadrature();
  ScanResult r = base_result(o, "q_halfplane");
  describe_particle(r, o, false);
  r.set("half_plane", o.half);
  describe_numerics(r, o);
  r.columns = {"beta", "q_right", "q_left", "q_sigma", "q_pi"};
  const HalfPlane half = o.half == "lower" ? HalfPlane::lower : HalfPlane::upper;
  for (const Speed& v : beta_grid(o)) {
    std::vector<Cell> row{v.beta()};
    if (o.kind() == Particle::boson) {
      const BosonRadiation rad(v, cfg);
      for (auto s : {Polarization::right, Polarization::left, Polarization::sigma, Polarization::pi}) {
        row.push_back(rad.half_plane_fraction(s, half));
      }
    } else {
      const ElectronRadiation rad(v, cfg);
      for (auto s : {Polarization::right, Polarization::left, Polarization::sigma, Polarization::pi}) {
        row.push_back(rad.half_plane_fraction(s, o.spin(), half));
      }
    }
    r.rows.push_back(std::move(row));
  }
  return r;
}

ScanResult dispatch_quantity(const Options& o) {
  const std::string& q = o.quantity;
  if (q == "table1") return table1_result(o);
  if (q == "freq" || q == "p" || q == "q_local" || q == "limits") return theta_scan(o, q);
  return beta_scan(o, q);
}

// ---- option wiring ------------------------------------------------------

void add_output_options(CLI::App* sub, Options& o, bool json_default = false) {
  if (json_default) o.format = "json";
  sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--abs-tol", o.abs_tol, "Quadrature absolute tolerance");
  sub->add_option("--rel-tol", o.rel_tol, "Quadrature relative tolerance");
  sub->add_option("--max-depth", o.max_depth, "Quadrature subdivision depth limit");
  sub->add_option("--unit", o.unit, "Angle unit for theta input and output")
      ->check(CLI::IsMember({"rad", "deg"}));
}

void add_particle_options(CLI::App* sub, Options& o, bool with_label) {
  sub->add_option("--particle", o.particle, "boson or electron")
      ->check(CLI::IsMember({"boson", "electron"}));
  sub->add_option("--zeta", o.zeta, "Electron transverse spin (+1 or -1)")
      ->check(CLI::IsMember({-1, 1}));
  if (with_label) {
    sub->add_option("--s", o.s, "Polarization: 0 total, 1/-1 circular, 2 sigma, 3 pi")
        ->check(CLI::IsMember({0, 1, -1, 2, 3}));
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Synchrotron radiation of n = 1 bosons and electrons", "qsr"};
  app.require_subcommand(1);
  Options o;

  auto* table = app.add_subcommand("table1", "Shape factors and power ratios, beta = 0 .. 1");
  add_output_options(table, o);

  Options crossover_opts;
  auto* crossover = app.add_subcommand("crossover", "Speed where k(+1; beta) = 1");
  add_output_options(crossover, crossover_opts, true);

  auto* scan = app.add_subcommand("scan", "Tabulate any quantity on a beta/theta grid");
  add_output_options(scan, o);
  add_particle_options(scan, o, true);
  scan->add_option("--quantity", o.quantity, "Quantity to tabulate")
      ->required()
      ->check(CLI::IsMember({"freq", "p", "q_local", "q_halfplane", "power", "ratio", "max_angle",
                             "eff_angle", "table1", "limits"}));
  scan->add_option("--beta", o.beta, "beta value, list v1,v2 or range a:b:n");
  scan->add_option("--theta", o.theta, "theta value, list or range a:b:n (pi, pi/2 accepted)");
  scan->add_option("--definition", o.definition, "Effective angle convention")
      ->check(CLI::IsMember({"rms", "equivalent_width"}));
  scan->add_option("--half", o.half, "Half plane for q_halfplane")
      ->check(CLI::IsMember({"upper", "lower"}));
  scan->add_option("--n", o.level, "Level number for freq");
  scan->add_option("--nu", o.harmonic, "Harmonic number for freq");

  auto* freq = app.add_subcommand("freq", "Emitted photon energy hbar omega / m0 c^2");
  add_output_options(freq, o);
  add_particle_options(freq, o, false);
  freq->add_option("--beta", o.beta, "beta value, list or range");
  freq->add_option("--theta", o.theta, "theta value, list or range");
  freq->add_option("--n", o.level, "Level number");
  freq->add_option("--nu", o.harmonic, "Harmonic number");

  auto* maxima = app.add_subcommand("maxima", "Interior maxima of p_s over (0, pi/2)");
  add_output_options(maxima, o);
  add_particle_options(maxima, o, true);
  maxima->add_option("--beta", o.beta, "beta value, list or range");

  auto* polarization = app.add_subcommand("polarization", "Half-plane polarization fractions");
  add_output_options(polarization, o);
  add_particle_options(polarization, o, false);
  polarization->add_option("--beta", o.beta, "beta value, list or range");
  polarization->add_option("--half", o.half, "upper or lower")
      ->check(CLI::IsMember({"upper", "lower"}));

  auto* limits = app.add_subcommand("limits", "Electron densities in the limit beta -> 1");
  add_output_options(limits, o);
  limits->add_option("--s", o.s, "Polarization label")->check(CLI::IsMember({0, 1, -1, 2, 3}));
  limits->add_option("--theta", o.theta, "theta value, list or range");

  auto* figures = app.add_subcommand("figures", "List the invocations behind figures 1-16");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kDomainError;
  }

  if (*figures) {
    for (const FigureRun& run : figure_runs()) {
      out << run.figure << '\t' << run.content << "\tqsr";
      for (const auto& a : run.args) out << ' ' << a;
      out << '\n';
    }
    return kOk;
  }

  try {
    ScanResult result;
    const Options* used = &o;
    if (*table) {
      result = table1_result(o);
    } else if (*crossover) {
      result = crossover_result(crossover_opts);
      used = &crossover_opts;
    } else if (*scan) {
      result = dispatch_quantity(o);
    } else if (*freq) {
      o.quantity = "freq";
      result = theta_scan(o, "freq");
    } else if (*maxima) {
      result = beta_scan(o, "max_angle");
    } else if (*polarization) {
      result = polarization_result(o);
    } else {
      result = theta_scan(o, "limits");
    }
    out << (used->format == "json" ? write_json(result) : write_csv(result));
    return kOk;
  } catch (const ConvergenceError& e) {
    err << "convergence error: " << e.what() << " (best estimate " << format_number(e.best_estimate())
        << ", error bound " << format_number(e.error_bound()) << ")\n";
    return kConvergenceError;
  } catch (const std::domain_error& e) {
    err << "domain error: " << e.what() << '\n';
    return kDomainError;
  }
}

}  // namespace qsr::cli
