#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pair_radiance/quadrature.hpp"
#include "pair_radiance/sources.hpp"

namespace pair_radiance {

/// Closed-form power estimate. The dimensionless phase-space integral is
/// set to 1, so these reproduce the published order-of-magnitude numbers.
struct ClosedFormPower {
  double watts = 0.0;
  /// v_R >= 0.1: the nonrelativistic estimate is outside its regime.
  bool regime_warning = false;
  /// Binary dielectric only: kappa1/rho1 == kappa2/rho2, m = 2 branch used.
  bool fine_tuned_branch = false;
};

/// kappa^2/(288 pi^2) (a/R)^6 v_R^8 hbar Omega / T
ClosedFormPower power_sphere_closed(const SphereConfig& cfg);
/// M^2 mu^2 (1-mu)^2/(512 pi^4) (kbar/rhobar)^2 v_R^8/R^6 hbar Omega/T, or in
/// the fine-tuned case M^2 mu^2 (1-mu)^2/(4 pi^4) (kappa/rho)^2 v_R^10/R^6 2 hbar Omega/T.
ClosedFormPower power_binary_dielectric_closed(const BinarySystem& sys);
/// 64/pi^2 mu^2 (1-mu)^2 v_R^10 2 hbar Omega / T
ClosedFormPower power_binary_metric_closed(const BinarySystem& sys);
/// Coefficient of 2 hbar Omega / T in power_binary_metric_closed.
double metric_power_coefficient(const DerivedOrbit& orbit);

/// Closed-form total pair rates (s^-1) with an explicit phase-space integral.
double rate_sphere_closed(const SphereConfig& cfg, double ie);
double rate_binary_dielectric_closed(const BinarySystem& sys, double ie);
double rate_binary_metric_closed(const BinarySystem& sys, double im);
/// The binary-dielectric rate coefficient written as
/// M^2 mu^2 (1-mu)^2 (kbar/rhobar)^2 Omega^9 R^2 / (1024 pi^5 c^8).
double rate_binary_dielectric_coefficient_direct(const BinarySystem& sys);

struct HarmonicRate {
  int m = 1;
  double rate = 0.0;  // s^-1
};

struct RateBreakdown {
  double total = 0.0;  // s^-1
  std::vector<HarmonicRate> harmonics;
};

/// Full numerical pipeline: integrates the channel-summed differential rate
/// over the reduced phase space for every harmonic 1..m_max.
RateBreakdown total_rate_numeric(const Source& source, int m_max,
                                 const QuadratureOptions& opts = {});
/// Rate of a single harmonic.
IntegralEstimate harmonic_rate_numeric(const Source& source, int m,
                                       const QuadratureOptions& opts = {});

struct GravitonPower {
  double paper = 0.0;       // 64 pi/5 v_R^7 M c^2 / T
  double quadrupole = 0.0;  // 32/5 mu^2 (1-mu)^2 v_R^10 c^5 / G
};

GravitonPower graviton_power(const DerivedOrbit& orbit);

struct PowerRatio {
  double formula = 0.0;     // 6.5e5 (rhobar/kbar)^2 G^{8/3} M^{2/3} / (c^2 Omega^{10/3})
  double recomputed = 0.0;  // P_M / P_E from the two closed forms
  double prefactor = 0.0;   // exact prefactor the reduction yields, 65536 pi^2
};

/// Exact prefactor of P_M / P_E: (64/pi^2 * 2) * 512 pi^4.
double power_ratio_prefactor();
/// The ratio formula with its published 6.5e5 prefactor.
double power_ratio_formula(double kappa_over_rho_bar, double total_mass, double omega);
/// Throws division-by-zero when kbar = 0.
PowerRatio power_ratio(const BinarySystem& sys);

/// Years until one pair is emitted: m hbar Omega / P. Throws invalid-input
/// for P <= 0.
double waiting_time(double power_watts, int m, double omega);

struct CrossCheck {
  std::string name;
  double reference = 0.0;
  double value = 0.0;
  double ratio = 0.0;  // value / reference
  bool flagged = false;  // |ratio - 1| above the check's tolerance
  std::string note;
};

struct PowerReport {
  std::optional<double> P_E;
  std::optional<double> P_M;
  std::optional<double> P_G_paper;
  std::optional<double> P_G_quadrupole;
  std::optional<double> pair_rate;           // s^-1, closed form
  std::optional<double> waiting_time_years;
  std::optional<double> ratio_PM_PE;
  bool regime_warning = false;
  bool fine_tuned_branch = false;
  std::vector<CrossCheck> closed_form_vs_numeric;
};

struct ReportOptions {
  QuadratureOptions quadrature{};
  bool include_numeric = true;
};

/// Report for a single dielectric sphere; metric and graviton fields are
/// left empty.
PowerReport crosscheck_report(const SphereConfig& cfg, const ReportOptions& opts = {});
/// Report for a binary: dielectric, metric and graviton powers with all
/// discrepancies between closed forms, numerics and prefactor variants
/// listed. Nothing is reconciled.
PowerReport crosscheck_report(const BinarySystem& sys, const ReportOptions& opts = {});

}  // namespace pair_radiance
