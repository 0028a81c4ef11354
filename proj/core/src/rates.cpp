#include "pair_radiance/rates.hpp"

#include <cmath>

#include "pair_radiance/errors.hpp"

namespace pair_radiance {
namespace {

using C = PhysicalConstants;

double pow_int(double x, int n) {
  double r = 1.0;
  for (int i = 0; i < n; ++i) r *= x;
  return r;
}

bool out_of_regime(double v) { return v >= kRelativisticWarningThreshold; }

double mass_weight(const BinarySystem& sys) {
  const double mu = sys.mu();
  return sys.mass() * sys.mass() * mu * mu * (1.0 - mu) * (1.0 - mu);
}

double mu_weight(const DerivedOrbit& orbit) {
  const double mu = orbit.mu;
  return mu * mu * (1.0 - mu) * (1.0 - mu);
}

// Effective kappa/rho for the fine-tuned branch, where both ratios agree.
double common_kappa_over_rho(const BinarySystem& sys) {
  return sys.config().kappa1 / sys.config().rho1;
}

}  // namespace

ClosedFormPower power_sphere_closed(const SphereConfig& cfg) {
  cfg.validate();
  const double v = cfg.v_R();
  const double ratio6 = pow_int(cfg.radius / cfg.orbit_radius, 6);
  const double watts = cfg.kappa * cfg.kappa / (288.0 * kPi * kPi) * ratio6 * pow_int(v, 8) *
                       C::hbar * cfg.omega / cfg.period();
  return {watts, out_of_regime(v), false};
}

ClosedFormPower power_binary_dielectric_closed(const BinarySystem& sys) {
  const auto& orbit = sys.orbit();
  const double v = orbit.v_R;
  const double R6 = pow_int(orbit.R, 6);
  const double unit = C::hbar * orbit.omega / orbit.T;
  ClosedFormPower out;
  out.regime_warning = out_of_regime(v);
  if (sys.fine_tuned()) {
    const double q = common_kappa_over_rho(sys);
    out.fine_tuned_branch = true;
    out.watts = mass_weight(sys) / (4.0 * pow_int(kPi, 4)) * q * q * pow_int(v, 10) / R6 * 2.0 * unit;
  } else {
    const double q = sys.kappa_over_rho_bar();
    out.watts = mass_weight(sys) / (512.0 * pow_int(kPi, 4)) * q * q * pow_int(v, 8) / R6 * unit;
  }
  return out;
}

double metric_power_coefficient(const DerivedOrbit& orbit) {
  return 64.0 / (kPi * kPi) * mu_weight(orbit) * pow_int(orbit.v_R, 10);
}

ClosedFormPower power_binary_metric_closed(const BinarySystem& sys) {
  const auto& orbit = sys.orbit();
  const double watts = metric_power_coefficient(orbit) * 2.0 * C::hbar * orbit.omega / orbit.T;
  return {watts, out_of_regime(orbit.v_R), false};
}

double rate_sphere_closed(const SphereConfig& cfg, double ie) {
  cfg.validate();
  return cfg.kappa * cfg.kappa / (288.0 * kPi * kPi * cfg.period()) *
         pow_int(cfg.radius / cfg.orbit_radius, 6) * pow_int(cfg.v_R(), 8) * ie;
}

double rate_binary_dielectric_closed(const BinarySystem& sys, double ie) {
  const auto& orbit = sys.orbit();
  const double q = sys.kappa_over_rho_bar();
  return mass_weight(sys) / (512.0 * pow_int(kPi, 4) * orbit.T) * q * q * pow_int(orbit.v_R, 8) /
         pow_int(orbit.R, 6) * ie;
}

double rate_binary_dielectric_coefficient_direct(const BinarySystem& sys) {
  const auto& orbit = sys.orbit();
  const double q = sys.kappa_over_rho_bar();
  return mass_weight(sys) * q * q * pow_int(orbit.omega, 9) * orbit.R * orbit.R /
         (1024.0 * pow_int(kPi, 5) * pow_int(C::c, 8));
}

double rate_binary_metric_closed(const BinarySystem& sys, double im) {
  const auto& orbit = sys.orbit();
  return 64.0 / (kPi * kPi * orbit.T) * mu_weight(orbit) * pow_int(orbit.v_R, 10) * im;
}

IntegralEstimate harmonic_rate_numeric(const Source& source, int m, const QuadratureOptions& opts) {
  const auto weight = custom_weight(
      [&source, m](const PairGeometry& g) { return total_differential_rate(source, g, m); });
  return integrate_reduced(weight, opts);
}

RateBreakdown total_rate_numeric(const Source& source, int m_max, const QuadratureOptions& opts) {
  if (m_max < 1 || m_max > kMaxBesselOrder) {
    fail(ErrorKind::InvalidInput, "total_rate_numeric: m_max outside [1, 20]");
  }
  RateBreakdown out;
  for (int m = 1; m <= m_max; ++m) {
    const double rate = harmonic_rate_numeric(source, m, opts).value;
    out.harmonics.push_back({m, rate});
    out.total += rate;
  }
  return out;
}

GravitonPower graviton_power(const DerivedOrbit& orbit) {
  GravitonPower out;
  out.paper = 64.0 * kPi / 5.0 * pow_int(orbit.v_R, 7) * orbit.total_mass * C::c * C::c / orbit.T;
  out.quadrupole = 32.0 / 5.0 * mu_weight(orbit) * pow_int(orbit.v_R, 10) * pow_int(C::c, 5) / C::G;
  return out;
}

double power_ratio_prefactor() {
  // (64/pi^2 * 2 hbar Omega/T) / (1/(512 pi^4) * hbar Omega/T)
  return 64.0 / (kPi * kPi) * 2.0 * 512.0 * pow_int(kPi, 4);
}

double power_ratio_formula(double kappa_over_rho_bar, double total_mass, double omega) {
  if (kappa_over_rho_bar == 0.0) fail(ErrorKind::DivisionByZero, "power_ratio: kappa-bar is zero");
  const double rho_over_kappa = 1.0 / kappa_over_rho_bar;
  return 6.5e5 * rho_over_kappa * rho_over_kappa * std::pow(C::G, 8.0 / 3.0) *
         std::pow(total_mass, 2.0 / 3.0) / (C::c * C::c * std::pow(omega, 10.0 / 3.0));
}

PowerRatio power_ratio(const BinarySystem& sys) {
  const double q = sys.kappa_over_rho_bar();
  if (q == 0.0) fail(ErrorKind::DivisionByZero, "power_ratio: kappa-bar is zero");
  PowerRatio out;
  out.formula = power_ratio_formula(q, sys.mass(), sys.orbit().omega);
  out.recomputed = power_binary_metric_closed(sys).watts / power_binary_dielectric_closed(sys).watts;
  out.prefactor = power_ratio_prefactor();
  return out;
}

double waiting_time(double power_watts, int m, double omega) {
  if (!(power_watts > 0.0)) fail(ErrorKind::InvalidInput, "waiting_time: power must be positive");
  if (m < 1) fail(ErrorKind::InvalidInput, "waiting_time: harmonic must be >= 1");
  return m * C::hbar * omega / power_watts / C::seconds_per_year;
}

namespace {

CrossCheck make_check(std::string name, double reference, double value, double tolerance,
                      std::string note) {
  CrossCheck c;
  c.name = std::move(name);
  c.reference = reference;
  c.value = value;
  c.ratio = reference != 0.0 ? value / reference : 0.0;
  c.flagged = reference == 0.0 ? value != 0.0 : std::abs(c.ratio - 1.0) > tolerance;
  c.note = std::move(note);
  return c;
}

int cutoff_for(const Source& source) {
  return harmonic_cutoff(source.v_R(), 1e-6, source.leading_harmonic());
}

}  // namespace

PowerReport crosscheck_report(const SphereConfig& cfg, const ReportOptions& opts) {
  PowerReport report;
  const auto pe = power_sphere_closed(cfg);
  report.P_E = pe.watts;
  report.regime_warning = pe.regime_warning;
  report.pair_rate = pe.watts / (C::hbar * cfg.omega);
  if (pe.watts > 0.0) report.waiting_time_years = waiting_time(pe.watts, 1, cfg.omega);

  if (opts.include_numeric) {
    const auto ie = integrate_reduced(ie_weight(), opts.quadrature).value;
    const auto source = Source::sphere(cfg);
    const auto numeric = total_rate_numeric(source, cutoff_for(source), opts.quadrature).total;
    report.closed_form_vs_numeric.push_back(
        make_check("dielectric_rate_numeric_vs_closed_with_IE", rate_sphere_closed(cfg, ie),
                   numeric, 0.02, "exact Bessel pipeline vs small-argument closed form"));
    report.closed_form_vs_numeric.push_back(make_check(
        "IE_vs_closed_form_convention", 1.0, ie, 1e-12, "closed-form power sets the integral to 1"));
  }
  return report;
}

PowerReport crosscheck_report(const BinarySystem& sys, const ReportOptions& opts) {
  PowerReport report;
  const auto& orbit = sys.orbit();
  const auto pe = power_binary_dielectric_closed(sys);
  const auto pm = power_binary_metric_closed(sys);
  const auto pg = graviton_power(orbit);
  report.P_E = pe.watts;
  report.P_M = pm.watts;
  report.P_G_paper = pg.paper;
  report.P_G_quadrupole = pg.quadrupole;
  report.regime_warning = pe.regime_warning || pm.regime_warning;
  report.fine_tuned_branch = pe.fine_tuned_branch;
  report.pair_rate = pm.watts / (2.0 * C::hbar * orbit.omega);
  report.waiting_time_years = waiting_time(pm.watts, 2, orbit.omega);
  if (pe.watts > 0.0) report.ratio_PM_PE = pm.watts / pe.watts;

  auto& checks = report.closed_form_vs_numeric;
  checks.push_back(make_check("graviton_quadrupole_vs_paper", pg.paper, pg.quadrupole, 1e-12,
                              "published formula carries no mu^2 (1-mu)^2 factor"));
  {
    const double k = 2.0 * orbit.omega / C::c;
    const double kperp = k;
    const double paper = std::norm(alpha_m_binary_metric(sys, 2, k, kperp, AlphaVariant::Paper).value);
    const double rederived =
        std::norm(alpha_m_binary_metric(sys, 2, k, kperp, AlphaVariant::Rederived).value);
    checks.push_back(make_check("metric_alpha_sq_rederived_vs_paper", paper, rederived, 1e-12,
                                "4 pi/k^2 versus 16 pi^2/k^2 prefactor"));
  }
  if (!pe.fine_tuned_branch && sys.kappa_over_rho_bar() != 0.0) {
    const auto ratio = power_ratio(sys);
    checks.push_back(make_check("PM_PE_ratio_formula_vs_recomputed", ratio.recomputed,
                                ratio.formula, 0.01, "published 6.5e5 versus 65536 pi^2"));
    checks.push_back(make_check("dielectric_rate_coefficient_direct_vs_closed",
                                rate_binary_dielectric_closed(sys, 1.0),
                                rate_binary_dielectric_coefficient_direct(sys), 1e-10,
                                "algebraic identity"));
  }

  if (opts.include_numeric) {
    const auto integrals = dimensionless_integrals(opts.quadrature);
    for (auto variant : {AlphaVariant::Paper, AlphaVariant::Rederived}) {
      const auto source = Source::binary_metric(sys, variant);
      const double numeric =
          total_rate_numeric(source, cutoff_for(source), opts.quadrature).total;
      checks.push_back(make_check(
          std::string("metric_rate_numeric_vs_closed_with_IM_") + std::string(to_string(variant)),
          rate_binary_metric_closed(sys, integrals.im.value), numeric, 0.02,
          "constant-factor mismatch between amplitude and rate formulas"));
    }
    if (!pe.fine_tuned_branch && sys.kappa_over_rho_bar() != 0.0) {
      const auto source = Source::binary_dielectric(sys);
      const double numeric = total_rate_numeric(source, cutoff_for(source), opts.quadrature).total;
      checks.push_back(make_check("dielectric_rate_numeric_vs_closed_with_IE",
                                  rate_binary_dielectric_closed(sys, integrals.ie.value), numeric,
                                  0.02, "exact Bessel pipeline vs small-argument closed form"));
    }
  }
  return report;
}

}  // namespace pair_radiance
