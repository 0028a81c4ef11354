#include "pair_radiance_cli/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "pair_radiance/errors.hpp"

namespace pair_radiance::cli {
namespace {

using json = nlohmann::json;

class Validator {
 public:
  void error(const std::string& path, const std::string& msg) {
    errors_.push_back(path.empty() ? msg : path + ": " + msg);
  }
  const std::vector<std::string>& errors() const { return errors_; }

  void reject_unknown(const json& obj, const std::string& path, const std::set<std::string>& known) {
    for (const auto& [key, value] : obj.items()) {
      if (!known.count(key)) error(join(path, key), "unknown key");
    }
  }

  std::optional<double> number(const json& obj, const std::string& path, const char* key, bool required) {
    const auto it = obj.find(key);
    if (it == obj.end()) {
      if (required) error(join(path, key), "missing required key");
      return std::nullopt;
    }
    if (!it->is_number()) {
      error(join(path, key), "must be a number");
      return std::nullopt;
    }
    const double v = it->get<double>();
    if (!std::isfinite(v)) {
      error(join(path, key), "must be finite");
      return std::nullopt;
    }
    return v;
  }

  std::optional<std::int64_t> integer(const json& obj, const std::string& path, const char* key,
                                      std::int64_t lo, std::int64_t hi) {
    const auto it = obj.find(key);
    if (it == obj.end()) return std::nullopt;
    if (!it->is_number_integer()) {
      error(join(path, key), "must be an integer");
      return std::nullopt;
    }
    const auto v = it->get<std::int64_t>();
    if (v < lo || v > hi) {
      error(join(path, key), "must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
      return std::nullopt;
    }
    return v;
  }

  std::optional<std::string> string(const json& obj, const std::string& path, const char* key, bool required) {
    const auto it = obj.find(key);
    if (it == obj.end()) {
      if (required) error(join(path, key), "missing required key");
      return std::nullopt;
    }
    if (!it->is_string()) {
      error(join(path, key), "must be a string");
      return std::nullopt;
    }
    return it->get<std::string>();
  }

  const json* object(const json& obj, const std::string& path, const char* key, bool required) {
    const auto it = obj.find(key);
    if (it == obj.end()) {
      if (required) error(join(path, key), "missing required key");
      return nullptr;
    }
    if (!it->is_object()) {
      error(join(path, key), "must be an object");
      return nullptr;
    }
    return &*it;
  }

  static std::string join(const std::string& path, const std::string& key) {
    return path.empty() ? key : path + "." + key;
  }

 private:
  std::vector<std::string> errors_;
};

void positive(Validator& v, const std::optional<double>& x, const std::string& path) {
  if (x && !(*x > 0.0)) v.error(path, "must be > 0");
}

/// Reads omega_rad_s or period_s (exactly one).
std::optional<double> read_omega(Validator& v, const json& sys) {
  const auto omega = v.number(sys, "system", "omega_rad_s", false);
  const auto period = v.number(sys, "system", "period_s", false);
  positive(v, omega, "system.omega_rad_s");
  positive(v, period, "system.period_s");
  if (sys.contains("omega_rad_s") && sys.contains("period_s")) {
    v.error("system", "give exactly one of omega_rad_s and period_s, not both");
    return std::nullopt;
  }
  if (!sys.contains("omega_rad_s") && !sys.contains("period_s")) {
    v.error("system", "one of omega_rad_s or period_s is required");
    return std::nullopt;
  }
  if (omega && *omega > 0.0) return omega;
  if (period && *period > 0.0) return kTwoPi / *period;
  return std::nullopt;
}

void parse_sphere(Validator& v, const json& sys, RunConfig& cfg) {
  v.reject_unknown(sys, "system", {"radius_m", "kappa", "orbit_radius_m", "omega_rad_s", "period_s"});
  const auto a = v.number(sys, "system", "radius_m", true);
  const auto kappa = v.number(sys, "system", "kappa", true);
  const auto R = v.number(sys, "system", "orbit_radius_m", true);
  const auto omega = read_omega(v, sys);
  positive(v, a, "system.radius_m");
  positive(v, R, "system.orbit_radius_m");
  if (kappa && !(*kappa > -1.0)) v.error("system.kappa", "must be > -1");
  if (!a || !kappa || !R || !omega || !v.errors().empty()) return;
  SphereConfig s{*a, *kappa, *R, *omega};
  if (!(s.radius < s.orbit_radius)) {
    v.error("system.radius_m", "must be below orbit_radius_m (sphere inside its orbit)");
  }
  if (!(s.v_R() < 1.0)) v.error("system", "orbital velocity orbit_radius_m * omega reaches c");
  cfg.sphere = s;
}

void parse_binary(Validator& v, const json& sys, RunConfig& cfg) {
  v.reject_unknown(sys, "system", {"mass_kg", "mu", "period_s", "omega_rad_s", "radius1_m", "radius2_m",
                                   "density1_kg_m3", "density2_kg_m3", "kappa1", "kappa2"});
  const auto mass = v.number(sys, "system", "mass_kg", true);
  const auto mu = v.number(sys, "system", "mu", true);
  const auto omega = read_omega(v, sys);
  const auto a1 = v.number(sys, "system", "radius1_m", true);
  const auto a2 = v.number(sys, "system", "radius2_m", true);
  const auto rho1 = v.number(sys, "system", "density1_kg_m3", false);
  const auto rho2 = v.number(sys, "system", "density2_kg_m3", false);
  const auto k1 = v.number(sys, "system", "kappa1", false);
  const auto k2 = v.number(sys, "system", "kappa2", false);
  positive(v, mass, "system.mass_kg");
  if (mu && !(*mu > 0.0 && *mu < 1.0)) v.error("system.mu", "must lie in the open interval (0,1)");
  positive(v, a1, "system.radius1_m");
  positive(v, a2, "system.radius2_m");
  positive(v, rho1, "system.density1_kg_m3");
  positive(v, rho2, "system.density2_kg_m3");
  if (k1 && !(*k1 > -1.0)) v.error("system.kappa1", "must be > -1");
  if (k2 && !(*k2 > -1.0)) v.error("system.kappa2", "must be > -1");
  if (sys.contains("density1_kg_m3") != sys.contains("density2_kg_m3")) {
    v.error("system", "give both density1_kg_m3 and density2_kg_m3 or neither");
  }
  if (!mass || !mu || !omega || !a1 || !a2 || !v.errors().empty()) return;

  const auto orbit_in = OrbitInput::from_omega(*mass, *mu, *omega);
  DerivedOrbit orbit;
  try {
    orbit = derive_orbit(orbit_in);
  } catch (const Error& e) {
    v.error("system", e.what());
    return;
  }
  auto bc = BinaryConfig::with_consistent_densities(orbit_in, *a1, *a2, k1.value_or(0.0), k2.value_or(0.0));
  if (rho1 && rho2) {
    bc.rho1 = *rho1;
    bc.rho2 = *rho2;
    cfg.explicit_densities = true;
    const double m1 = *mu * *mass, m2 = (1.0 - *mu) * *mass;
    if (std::abs(sphere_density(m1, *a1) / *rho1 - 1.0) > kDensityConsistencyTolerance) {
      v.error("system.density1_kg_m3", "inconsistent with mu * mass_kg and radius1_m");
    }
    if (std::abs(sphere_density(m2, *a2) / *rho2 - 1.0) > kDensityConsistencyTolerance) {
      v.error("system.density2_kg_m3", "inconsistent with (1 - mu) * mass_kg and radius2_m");
    }
  }
  if (!(*a1 + *a2 < orbit.R)) {
    std::ostringstream os;
    os.precision(6);
    os << "bodies overlap: radius1_m + radius2_m = " << *a1 + *a2
       << " m must be below the separation R = " << orbit.R << " m (non-overlap a1 + a2 < R)";
    v.error("system", os.str());
  }
  if (v.errors().empty()) cfg.binary = bc;
}

void parse_numerics(Validator& v, const json& n, Numerics& out) {
  v.reject_unknown(n, "numerics", {"order", "mc_samples", "seed", "tolerance", "events", "threads", "harmonic", "points"});
  if (auto x = v.integer(n, "numerics", "order", 2, 256)) out.order = static_cast<int>(*x);
  if (auto x = v.integer(n, "numerics", "mc_samples", 1000, 1'000'000'000'000)) out.mc_samples = *x;
  if (auto x = v.integer(n, "numerics", "seed", 0, INT64_MAX)) out.seed = *x;
  if (auto x = v.number(n, "numerics", "tolerance", false)) {
    if (*x > 0.0 && *x <= 1.0) out.tolerance = *x;
    else v.error("numerics.tolerance", "must lie in (0, 1]");
  }
  if (auto x = v.integer(n, "numerics", "events", 1, 100'000'000)) out.events = *x;
  if (auto x = v.integer(n, "numerics", "threads", 1, 1024)) out.threads = static_cast<int>(*x);
  if (auto x = v.integer(n, "numerics", "harmonic", 1, kMaxBesselOrder)) out.harmonic = static_cast<int>(*x);
  if (auto x = v.integer(n, "numerics", "points", 2, 100000)) out.points = static_cast<int>(*x);
}

void parse_output(Validator& v, const json& o, OutputSpec& out) {
  v.reject_unknown(o, "output", {"path", "format"});
  if (auto p = v.string(o, "output", "path", false)) out.path = *p;
  if (auto f = v.string(o, "output", "format", false)) {
    if (*f == "csv") out.format = Format::Csv;
    else if (*f == "json") out.format = Format::Json;
    else v.error("output.format", "must be \"csv\" or \"json\"");
  }
}

void parse_scan(Validator& v, const json& s, RunConfig& cfg) {
  v.reject_unknown(s, "scan", {"parameter", "start", "stop", "points", "spacing"});
  ScanSpec scan;
  const auto param = v.string(s, "scan", "parameter", true);
  const auto start = v.number(s, "scan", "start", true);
  const auto stop = v.number(s, "scan", "stop", true);
  if (auto p = v.integer(s, "scan", "points", 2, 10000)) scan.points = static_cast<int>(*p);
  if (auto sp = v.string(s, "scan", "spacing", false)) {
    if (*sp == "log") scan.log_spacing = true;
    else if (*sp != "linear") v.error("scan.spacing", "must be \"linear\" or \"log\"");
  }
  const bool sphere = cfg.scenario == Scenario::Sphere;
  const std::set<std::string> allowed = sphere ? std::set<std::string>{"omega_rad_s", "period_s", "orbit_radius_m"}
                                               : std::set<std::string>{"omega_rad_s", "period_s", "mass_kg"};
  if (param && !allowed.count(*param)) {
    std::string list;
    for (const auto& a : allowed) list += (list.empty() ? "" : ", ") + a;
    v.error("scan.parameter", "must be one of " + list);
  }
  positive(v, start, "scan.start");
  positive(v, stop, "scan.stop");
  if (!param || !start || !stop) return;
  scan.parameter = *param;
  scan.start = *start;
  scan.stop = *stop;
  cfg.scan = scan;
}

}  // namespace

std::string_view to_string(Scenario s) {
  switch (s) {
    case Scenario::Sphere: return "sphere";
    case Scenario::BinaryDielectric: return "binary_dielectric";
    case Scenario::BinaryMetric: return "binary_metric";
    case Scenario::Compare: return "compare";
  }
  return "unknown";
}

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

RunConfig parse_config_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::ConfigError, std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) fail(ErrorKind::ConfigError, "config must be a JSON object");

  RunConfig cfg;
  cfg.hash = fnv1a(doc.dump());
  Validator v;
  v.reject_unknown(doc, "", {"scenario", "system", "numerics", "output", "scan", "alpha_variant"});

  bool scenario_ok = false;
  if (auto s = v.string(doc, "", "scenario", true)) {
    scenario_ok = true;
    if (*s == "sphere") cfg.scenario = Scenario::Sphere;
    else if (*s == "binary_dielectric") cfg.scenario = Scenario::BinaryDielectric;
    else if (*s == "binary_metric") cfg.scenario = Scenario::BinaryMetric;
    else if (*s == "compare") cfg.scenario = Scenario::Compare;
    else {
      scenario_ok = false;
      v.error("scenario", "must be one of sphere, binary_dielectric, binary_metric, compare");
    }
  }
  if (auto a = v.string(doc, "", "alpha_variant", false)) {
    if (*a == "paper") cfg.alpha_variant = AlphaVariant::Paper;
    else if (*a == "rederived") cfg.alpha_variant = AlphaVariant::Rederived;
    else v.error("alpha_variant", "must be \"paper\" or \"rederived\"");
  }
  if (const json* n = v.object(doc, "", "numerics", false)) parse_numerics(v, *n, cfg.numerics);
  if (const json* o = v.object(doc, "", "output", false)) parse_output(v, *o, cfg.output);
  const json* sys = v.object(doc, "", "system", true);
  if (scenario_ok) {
    if (const json* s = v.object(doc, "", "scan", false)) parse_scan(v, *s, cfg);
  }
  // Physics checks only run once the schema is clean.
  if (sys && scenario_ok) {
    Validator sv;
    if (cfg.scenario == Scenario::Sphere) parse_sphere(sv, *sys, cfg);
    else parse_binary(sv, *sys, cfg);
    for (const auto& e : sv.errors()) v.error("", e);
  }

  if (!v.errors().empty()) {
    std::string msg = "invalid config (" + std::to_string(v.errors().size()) + " error" +
                      (v.errors().size() == 1 ? "" : "s") + ")";
    for (const auto& e : v.errors()) {
      msg += "\n  ";
      msg += e;
    }
    fail(ErrorKind::ConfigError, msg);
  }
  return cfg;
}

RunConfig parse_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::IoError, "cannot read config file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) fail(ErrorKind::IoError, "error reading config file " + path);
  return parse_config_text(ss.str());
}

BinaryConfig binary_for_orbit(const RunConfig& cfg, const OrbitInput& orbit) {
  const auto& b = *cfg.binary;
  if (cfg.explicit_densities && orbit.total_mass == b.orbit.total_mass) {
    auto out = b;
    out.orbit = orbit;
    return out;
  }
  return BinaryConfig::with_consistent_densities(orbit, b.a1, b.a2, b.kappa1, b.kappa2);
}

}  // namespace pair_radiance::cli
