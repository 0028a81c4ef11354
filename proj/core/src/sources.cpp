#include "pair_radiance/sources.hpp"

#include <cmath>
#include <string>

#include "pair_radiance/errors.hpp"

namespace pair_radiance {
namespace {

constexpr double kFourThirdsPi = 4.0 * kPi / 3.0;

void check_wave_numbers(double k, double kperp, const char* who) {
  if (!(k >= 0.0) || !std::isfinite(k)) fail(ErrorKind::InvalidInput, std::string(who) + ": k must be >= 0");
  if (!(kperp >= 0.0)) fail(ErrorKind::InvalidInput, std::string(who) + ": kperp must be >= 0");
  // Allow rounding when kperp is computed from the same vector as k.
  if (kperp > k * (1.0 + 1e-12)) fail(ErrorKind::InvalidInput, std::string(who) + ": kperp exceeds k");
}

void check_harmonic(int m, int lowest, const char* who) {
  if (m < lowest || m > kMaxBesselOrder) {
    fail(ErrorKind::InvalidInput, std::string(who) + ": harmonic " + std::to_string(m) +
                                      " outside supported range");
  }
}

double parity(int m) { return (m % 2 == 0) ? 1.0 : -1.0; }

}  // namespace

void SphereConfig::validate() const {
  if (!(radius > 0.0)) fail(ErrorKind::InvalidInput, "sphere radius must be positive");
  if (!(kappa > -1.0) || !std::isfinite(kappa)) fail(ErrorKind::InvalidInput, "kappa must exceed -1");
  if (!(orbit_radius > 0.0)) fail(ErrorKind::InvalidInput, "orbit radius must be positive");
  if (!(radius < orbit_radius)) fail(ErrorKind::InvalidInput, "sphere radius must be below the orbit radius");
  if (!(omega > 0.0) || !std::isfinite(omega)) fail(ErrorKind::InvalidInput, "orbital frequency must be positive");
  if (!(v_R() < 1.0)) fail(ErrorKind::OutOfRegime, "orbital velocity is not below c");
}

double sphere_density(double mass, double radius) {
  return mass / (kFourThirdsPi * radius * radius * radius);
}

BinaryConfig BinaryConfig::with_consistent_densities(const OrbitInput& orbit, double a1, double a2,
                                                     double kappa1, double kappa2) {
  BinaryConfig cfg;
  cfg.orbit = orbit;
  cfg.a1 = a1;
  cfg.a2 = a2;
  cfg.kappa1 = kappa1;
  cfg.kappa2 = kappa2;
  cfg.rho1 = sphere_density(orbit.mu * orbit.total_mass, a1);
  cfg.rho2 = sphere_density((1.0 - orbit.mu) * orbit.total_mass, a2);
  return cfg;
}

BinarySystem::BinarySystem(const BinaryConfig& config)
    : config_(config), orbit_(derive_orbit(config.orbit)) {
  if (!(config_.a1 > 0.0) || !(config_.a2 > 0.0)) fail(ErrorKind::InvalidInput, "body radii must be positive");
  if (!(config_.rho1 > 0.0) || !(config_.rho2 > 0.0)) fail(ErrorKind::InvalidInput, "densities must be positive");
  if (!(config_.kappa1 > -1.0) || !(config_.kappa2 > -1.0)) fail(ErrorKind::InvalidInput, "kappa must exceed -1");
  const double m1 = kFourThirdsPi * std::pow(config_.a1, 3) * config_.rho1;
  const double m2 = kFourThirdsPi * std::pow(config_.a2, 3) * config_.rho2;
  if (std::abs(m1 / body1_mass() - 1.0) > kDensityConsistencyTolerance) {
    fail(ErrorKind::InvalidInput, "body 1 volume x density does not match mu M");
  }
  if (std::abs(m2 / body2_mass() - 1.0) > kDensityConsistencyTolerance) {
    fail(ErrorKind::InvalidInput, "body 2 volume x density does not match (1 - mu) M");
  }
  if (!(config_.a1 + config_.a2 < orbit_.R)) {
    fail(ErrorKind::InvalidInput, "bodies overlap: a1 + a2 must be below the separation R");
  }
}

double BinarySystem::kappa_over_rho_bar() const {
  return config_.kappa1 / config_.rho1 - config_.kappa2 / config_.rho2;
}

bool BinarySystem::fine_tuned() const {
  const double q1 = config_.kappa1 / config_.rho1;
  const double q2 = config_.kappa2 / config_.rho2;
  const double scale = std::max(std::abs(q1), std::abs(q2));
  // Two inert bodies radiate nothing; that is not a cancellation.
  return scale > 0.0 && std::abs(q1 - q2) <= 1e-12 * scale;
}

Vec3 BinarySystem::position1(double t) const {
  const double phase = orbit_.omega * t;
  const double rho = (1.0 - mu()) * orbit_.R;
  return {rho * std::cos(phase), rho * std::sin(phase), 0.0};
}

Vec3 BinarySystem::position2(double t) const {
  const double phase = orbit_.omega * t;
  const double rho = -mu() * orbit_.R;
  return {rho * std::cos(phase), rho * std::sin(phase), 0.0};
}

std::string_view to_string(SourceKind kind) {
  switch (kind) {
    case SourceKind::DielectricSphere: return "dielectric_sphere";
    case SourceKind::BinaryDielectric: return "binary_dielectric";
    case SourceKind::BinaryMetric: return "binary_metric";
  }
  return "unknown";
}

std::string_view to_string(AlphaVariant variant) {
  return variant == AlphaVariant::Paper ? "paper" : "rederived";
}

bool SourceChannel::allows(HelicityPair pair) const {
  for (const auto& p : allowed_pairs) {
    if (p == pair) return true;
  }
  return false;
}

std::complex<double> HarmonicAmplitude::phase(double phi) const {
  static constexpr std::complex<double> kIPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return kIPowers[((m % 4) + 4) % 4] * std::polar(1.0, m * phi);
}

HarmonicAmplitude alpha_m_sphere(const SphereConfig& cfg, int m, double k, double kperp) {
  check_harmonic(m, 0, "alpha_m_sphere");
  check_wave_numbers(k, kperp, "alpha_m_sphere");
  const double value = kFourThirdsPi * std::pow(cfg.radius, 3) * cfg.kappa *
                       form_factor(k * cfg.radius) * bessel_j(m, kperp * cfg.orbit_radius);
  return {m, value, k, kperp};
}

HarmonicAmplitude alpha_m_binary_dielectric(const BinarySystem& sys, int m, double k,
                                            double kperp) {
  check_harmonic(m, 0, "alpha_m_binary_dielectric");
  check_wave_numbers(k, kperp, "alpha_m_binary_dielectric");
  const auto& c = sys.config();
  const double mu = sys.mu();
  const double R = sys.orbit().R;
  const double first = mu * c.kappa1 / c.rho1 * form_factor(k * c.a1) *
                       bessel_j(m, (1.0 - mu) * kperp * R);
  const double second = parity(m) * (1.0 - mu) * c.kappa2 / c.rho2 * form_factor(k * c.a2) *
                        bessel_j(m, mu * kperp * R);
  return {m, sys.mass() * (first + second), k, kperp};
}

HarmonicAmplitude alpha_m_binary_metric(const BinarySystem& sys, int m, double k, double kperp,
                                        AlphaVariant variant) {
  check_harmonic(m, 1, "alpha_m_binary_metric");
  if (k == 0.0) fail(ErrorKind::SingularInput, "alpha_m_binary_metric: k = 0");
  check_wave_numbers(k, kperp, "alpha_m_binary_metric");
  const auto& c = sys.config();
  const auto& orbit = sys.orbit();
  const double mu = sys.mu();
  const double prefactor =
      variant == AlphaVariant::Paper ? -16.0 * kPi * kPi / (k * k) : -4.0 * kPi / (k * k);
  const double bracket =
      orbit.r1 * std::cos(k * c.a1) * bessel_j(m, (1.0 - mu) * kperp * orbit.R) +
      parity(m) * orbit.r2 * std::cos(k * c.a2) * bessel_j(m, mu * kperp * orbit.R);
  return {m, prefactor * bracket, k, kperp};
}

std::complex<double> alpha_m_time_oracle(double orbit_radius, int m, double kperp, double phi,
                                         int nodes) {
  if (nodes < 8) fail(ErrorKind::InvalidInput, "alpha_m_time_oracle: too few nodes");
  // Integrate over s = Omega t; the period drops out.
  const double x = kperp * orbit_radius;
  std::complex<double> sum{0.0, 0.0};
  for (int j = 0; j < nodes; ++j) {
    const double s = kTwoPi * j / nodes;
    sum += std::polar(1.0, m * s + x * std::cos(s - phi));
  }
  return sum / static_cast<double>(nodes);
}

WeakFieldAlpha weak_field_alpha(const BinarySystem& sys, const Vec3& r, double t) {
  const auto& c = sys.config();
  const double d1 = norm(r - sys.position1(t));
  const double d2 = norm(r - sys.position2(t));
  if (d1 <= c.a1 || d2 <= c.a2) {
    fail(ErrorKind::InvalidInput, "weak_field_alpha: point lies inside a body");
  }
  const double s = sys.orbit().r1 / d1 + sys.orbit().r2 / d2;
  const double h0 = 1.0 - s;
  const double h1 = 1.0 + s;
  return {std::sqrt(h0 / h1) - 1.0, -s};
}

GravHarmonicRatio grav_m1_m2_ratio(const BinarySystem& sys, double K, double Kperp) {
  if (Kperp == 0.0) fail(ErrorKind::SingularInput, "grav_m1_m2_ratio: Kperp = 0");
  const auto& c = sys.config();
  const auto& orbit = sys.orbit();
  const double mu = sys.mu();
  const double bracket = (1.0 - 2.0 * mu) / 2.0 +
                         2.0 * (c.a1 * c.a1 - c.a2 * c.a2) / (orbit.R * orbit.R) * K / Kperp;
  GravHarmonicRatio out;
  out.approx = orbit.v_R * orbit.v_R * bracket * bracket;
  const double a1 = std::norm(alpha_m_binary_metric(sys, 1, K, Kperp).value);
  const double a2 = std::norm(alpha_m_binary_metric(sys, 2, 2.0 * K, 2.0 * Kperp).value);
  out.exact = a1 / a2;
  return out;
}

int harmonic_cutoff(double v_R, double tol, int leading_harmonic) {
  if (!(v_R > 0.0 && v_R < 1.0)) fail(ErrorKind::InvalidInput, "harmonic_cutoff: v_R must lie in (0,1)");
  if (!(tol > 0.0 && tol <= 1.0)) fail(ErrorKind::InvalidInput, "harmonic_cutoff: tol must lie in (0,1]");
  if (leading_harmonic < 1) fail(ErrorKind::InvalidInput, "harmonic_cutoff: leading harmonic must be >= 1");
  double product = 1.0;
  for (int m = leading_harmonic; m < kMaxBesselOrder; ++m) {
    product *= harmonic_suppression_ratio(m, v_R).asymptotic;
    if (product < tol) return m;
  }
  fail(ErrorKind::OutOfRegime, "harmonic_cutoff: suppression not reached within 20 harmonics");
}

Source::Source(std::variant<SphereConfig, BinarySystem> model, SourceChannel channel,
               AlphaVariant variant)
    : model_(std::move(model)), channel_(std::move(channel)), variant_(variant) {}

Source Source::sphere(const SphereConfig& cfg) {
  cfg.validate();
  SourceChannel ch{SourceKind::DielectricSphere,
                   {std::begin(kAllHelicityPairs), std::end(kAllHelicityPairs)},
                   1.0 / (8.0 * std::pow(kTwoPi, 5))};
  return Source(cfg, std::move(ch), AlphaVariant::Paper);
}

Source Source::binary_dielectric(const BinarySystem& sys) {
  SourceChannel ch{SourceKind::BinaryDielectric,
                   {std::begin(kAllHelicityPairs), std::end(kAllHelicityPairs)},
                   1.0 / (8.0 * std::pow(kTwoPi, 5))};
  return Source(sys, std::move(ch), AlphaVariant::Paper);
}

Source Source::binary_metric(const BinarySystem& sys, AlphaVariant variant) {
  // The published rate carries 2/(2 pi)^5 for the opposite-helicity pair;
  // split evenly over the LR and RL labelings so the channel sum matches it.
  SourceChannel ch{SourceKind::BinaryMetric,
                   {{Helicity::L, Helicity::R}, {Helicity::R, Helicity::L}},
                   1.0 / std::pow(kTwoPi, 5)};
  return Source(sys, std::move(ch), variant);
}

double Source::omega() const {
  if (const auto* s = sphere_config()) return s->omega;
  return binary()->orbit().omega;
}

double Source::v_R() const {
  if (const auto* s = sphere_config()) return s->v_R();
  return binary()->orbit().v_R;
}

int Source::leading_harmonic() const { return kind() == SourceKind::BinaryMetric ? 2 : 1; }

HarmonicAmplitude Source::amplitude(int m, double k, double kperp) const {
  switch (kind()) {
    case SourceKind::DielectricSphere: return alpha_m_sphere(*sphere_config(), m, k, kperp);
    case SourceKind::BinaryDielectric: return alpha_m_binary_dielectric(*binary(), m, k, kperp);
    case SourceKind::BinaryMetric: return alpha_m_binary_metric(*binary(), m, k, kperp, variant_);
  }
  fail(ErrorKind::InvalidInput, "unknown source kind");
}

double Source::amplitude_sq(int m, double k, double kperp) const {
  return std::norm(amplitude(m, k, kperp).value);
}

Source Source::with_kappa_scaled(double scale) const {
  switch (kind()) {
    case SourceKind::DielectricSphere: {
      auto cfg = *sphere_config();
      cfg.kappa *= scale;
      return sphere(cfg);
    }
    case SourceKind::BinaryDielectric: {
      auto cfg = binary()->config();
      cfg.kappa1 *= scale;
      cfg.kappa2 *= scale;
      return binary_dielectric(BinarySystem(cfg));
    }
    case SourceKind::BinaryMetric: return *this;
  }
  return *this;
}

}  // namespace pair_radiance
