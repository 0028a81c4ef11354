#pragma once

#include <complex>
#include <string_view>
#include <variant>
#include <vector>

#include "pair_radiance/special.hpp"
#include "pair_radiance/units.hpp"
#include "pair_radiance/vec3.hpp"

namespace pair_radiance {

/// Single homogeneous sphere on a circular orbit of given radius and frequency.
struct SphereConfig {
  double radius = 0.0;        // a, m
  double kappa = 0.0;         // 1/eps_r - 1 (or 1/mu_r - 1)
  double orbit_radius = 0.0;  // R, m
  double omega = 0.0;         // rad/s

  double v_R() const { return orbit_radius * omega / PhysicalConstants::c; }
  double period() const { return kTwoPi / omega; }
  /// Throws invalid-input on violated invariants (a > 0, kappa > -1, a < R,
  /// omega > 0) and out-of-regime when v_R >= 1.
  void validate() const;
};

/// Two bodies orbiting their common center of mass.
struct BinaryConfig {
  OrbitInput orbit;
  double a1 = 0.0;      // m
  double a2 = 0.0;      // m
  double rho1 = 0.0;    // kg/m^3
  double rho2 = 0.0;    // kg/m^3
  double kappa1 = 0.0;
  double kappa2 = 0.0;

  /// Fills rho1, rho2 from the body masses mu M and (1 - mu) M.
  static BinaryConfig with_consistent_densities(const OrbitInput& orbit, double a1, double a2,
                                                double kappa1, double kappa2);
};

inline constexpr double kDensityConsistencyTolerance = 1e-6;

/// Mean density of a uniform sphere.
double sphere_density(double mass, double radius);

/// Validated binary: the config together with its Kepler orbit.
class BinarySystem {
 public:
  /// Validates radii, densities (consistent with the body masses within
  /// 1e-6 relative) and non-overlap a1 + a2 < R. Throws invalid-input.
  explicit BinarySystem(const BinaryConfig& config);

  const BinaryConfig& config() const { return config_; }
  const DerivedOrbit& orbit() const { return orbit_; }
  double mu() const { return orbit_.mu; }
  double mass() const { return orbit_.total_mass; }
  double body1_mass() const { return orbit_.mu * orbit_.total_mass; }
  double body2_mass() const { return (1.0 - orbit_.mu) * orbit_.total_mass; }

  /// kappa1/rho1 - kappa2/rho2, the effective kappa-bar / rho-bar.
  double kappa_over_rho_bar() const;
  /// True when kappa1/rho1 and kappa2/rho2 are nonzero and agree to 1e-12
  /// relative.
  bool fine_tuned() const;

  Vec3 position1(double t) const;
  Vec3 position2(double t) const;

 private:
  BinaryConfig config_;
  DerivedOrbit orbit_;
};

enum class SourceKind { DielectricSphere, BinaryDielectric, BinaryMetric };
std::string_view to_string(SourceKind kind);

/// Prefactor of the metric amplitude: the published 16 pi^2 / k^2 or the
/// 4 pi / k^2 obtained from the regularized integral of e^{ik.r}/r over r > a.
enum class AlphaVariant { Paper, Rederived };
std::string_view to_string(AlphaVariant variant);

struct HelicityPair {
  Helicity first;
  Helicity second;
  constexpr bool same() const { return first == second; }
  constexpr bool operator==(const HelicityPair&) const = default;
};

inline constexpr HelicityPair kAllHelicityPairs[4] = {
    {Helicity::L, Helicity::L}, {Helicity::L, Helicity::R},
    {Helicity::R, Helicity::L}, {Helicity::R, Helicity::R}};

struct SourceChannel {
  SourceKind kind = SourceKind::DielectricSphere;
  std::vector<HelicityPair> allowed_pairs;
  /// Per helicity channel; multiplies omega1 omega2 |alpha_m|^2 delta.
  double rate_normalization = 0.0;

  bool allows(HelicityPair pair) const;
};

/// Harmonic amplitude with the i^m e^{i m phi} phase factored out.
struct HarmonicAmplitude {
  int m = 0;
  std::complex<double> value;  // m^3
  double k = 0.0;              // 1/m
  double kperp = 0.0;          // 1/m

  /// The omitted factor i^m e^{i m phi} for azimuth phi of k.
  std::complex<double> phase(double phi) const;
};

HarmonicAmplitude alpha_m_sphere(const SphereConfig& cfg, int m, double k, double kperp);
HarmonicAmplitude alpha_m_binary_dielectric(const BinarySystem& sys, int m, double k,
                                            double kperp);
/// Throws singular-input for k = 0.
HarmonicAmplitude alpha_m_binary_metric(const BinarySystem& sys, int m, double k, double kperp,
                                        AlphaVariant variant = AlphaVariant::Paper);

/// (1/T) int_0^T dt e^{i m Omega t} e^{i kperp rho cos(Omega t - phi)} by the
/// periodic trapezoid rule; equals i^m e^{i m phi} J_m(kperp rho). rho is the
/// signed orbit radius of the body (negative for the body opposite the first).
std::complex<double> alpha_m_time_oracle(double orbit_radius, int m, double kperp, double phi,
                                         int nodes = 128);

struct WeakFieldAlpha {
  double exact = 0.0;       // sqrt(h0/h1) - 1 with the summed weak-field h0, h1
  double linearized = 0.0;  // -r1/|r-R1| - r2/|r-R2|
};

/// Metric-induced alpha = beta at point r and time t. Throws invalid-input
/// inside either body.
WeakFieldAlpha weak_field_alpha(const BinarySystem& sys, const Vec3& r, double t);

struct GravHarmonicRatio {
  double approx = 0.0;  // v_R^2 ((1-2mu)/2 + 2 (a1^2 - a2^2)/R^2 K/Kperp)^2
  double exact = 0.0;   // |alpha_1(K)|^2 / |alpha_2(2K)|^2
};

/// m = 1 versus m = 2 metric amplitudes. The approximation assumes K close to
/// Omega/c and Kperp close to K; it diverges as Kperp -> 0. Throws
/// singular-input for Kperp = 0.
GravHarmonicRatio grav_m1_m2_ratio(const BinarySystem& sys, double K, double Kperp);

/// Smallest harmonic m_max >= leading such that the product of asymptotic
/// suppression ratios from the leading harmonic through m_max is below tol.
/// Throws out-of-regime if that needs more than 20 harmonics.
int harmonic_cutoff(double v_R, double tol, int leading_harmonic = 1);

/// A radiating system: one of the three source models.
class Source {
 public:
  static Source sphere(const SphereConfig& cfg);
  static Source binary_dielectric(const BinarySystem& sys);
  static Source binary_metric(const BinarySystem& sys, AlphaVariant variant = AlphaVariant::Paper);

  SourceKind kind() const { return channel_.kind; }
  const SourceChannel& channel() const { return channel_; }
  AlphaVariant alpha_variant() const { return variant_; }
  double omega() const;
  double v_R() const;
  double period() const { return kTwoPi / omega(); }
  /// 2 for the metric source, 1 otherwise.
  int leading_harmonic() const;

  /// |alpha_m(k, kperp)|^2 in m^6.
  double amplitude_sq(int m, double k, double kperp) const;
  HarmonicAmplitude amplitude(int m, double k, double kperp) const;

  const SphereConfig* sphere_config() const { return std::get_if<SphereConfig>(&model_); }
  const BinarySystem* binary() const { return std::get_if<BinarySystem>(&model_); }

  /// Same source with every material kappa multiplied by scale (metric
  /// sources are returned unchanged).
  Source with_kappa_scaled(double scale) const;

 private:
  Source(std::variant<SphereConfig, BinarySystem> model, SourceChannel channel,
         AlphaVariant variant);

  std::variant<SphereConfig, BinarySystem> model_;
  SourceChannel channel_;
  AlphaVariant variant_ = AlphaVariant::Paper;
};

}  // namespace pair_radiance
