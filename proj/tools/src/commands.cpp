#include "pair_radiance_cli/commands.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "pair_radiance/errors.hpp"
#include "pair_radiance/rates.hpp"
#include "pair_radiance/sampler.hpp"
#include "pair_radiance_cli/version.hpp"

namespace pair_radiance::cli {
namespace {

Source make_source(const RunConfig& cfg, const std::string& command) {
  switch (cfg.scenario) {
    case Scenario::Sphere: return Source::sphere(*cfg.sphere);
    case Scenario::BinaryDielectric: return Source::binary_dielectric(BinarySystem(*cfg.binary));
    case Scenario::BinaryMetric: return Source::binary_metric(BinarySystem(*cfg.binary), cfg.alpha_variant);
    case Scenario::Compare: break;
  }
  fail(ErrorKind::ConfigError,
       "subcommand '" + command + "' needs scenario sphere, binary_dielectric or binary_metric");
}

BinarySystem require_binary(const RunConfig& cfg, const std::string& command) {
  if (!cfg.binary) fail(ErrorKind::ConfigError, "subcommand '" + command + "' needs a binary scenario");
  return BinarySystem(*cfg.binary);
}

QuadratureOptions quadrature(const RunConfig& cfg, int threads) {
  const int n = cfg.numerics.order;
  return {n, n, n, threads};
}

int harmonic_limit(const RunConfig& cfg, const Source& s) {
  if (cfg.numerics.harmonic) return *cfg.numerics.harmonic;
  return harmonic_cutoff(s.v_R(), cfg.numerics.tolerance, s.leading_harmonic());
}

int single_harmonic(const RunConfig& cfg, const Source& s) {
  return cfg.numerics.harmonic.value_or(s.leading_harmonic());
}

void add_meta(Table& t, const std::string& k, double v) { t.meta.emplace_back(k, format_double(v)); }

Cell opt(const std::optional<double>& v) { return v ? Cell{*v} : Cell{}; }

double closed_rate(const Source& s, const DimensionlessIntegrals& d) {
  switch (s.kind()) {
    case SourceKind::DielectricSphere: return rate_sphere_closed(*s.sphere_config(), d.ie.value);
    case SourceKind::BinaryDielectric: return rate_binary_dielectric_closed(*s.binary(), d.ie.value);
    case SourceKind::BinaryMetric: return rate_binary_metric_closed(*s.binary(), d.im.value);
  }
  return 0.0;
}

Table cmd_rate(const RunConfig& cfg, int threads) {
  const auto source = make_source(cfg, "rate");
  const int m_max = harmonic_limit(cfg, source);
  const auto q = quadrature(cfg, threads);
  const auto breakdown = total_rate_numeric(source, m_max, q);
  const auto d = dimensionless_integrals(q);
  Table t;
  t.meta = standard_header("rate", cfg);
  add_meta(t, "v_R", source.v_R());
  t.meta.emplace_back("m_max", std::to_string(m_max));
  add_meta(t, "total_rate_per_s", breakdown.total);
  add_meta(t, "closed_form_rate_per_s", closed_rate(source, d));
  t.columns = {"harmonic", "rate_per_s", "power_W", "fraction"};
  for (const auto& h : breakdown.harmonics) {
    const double power = h.rate * h.m * PhysicalConstants::hbar * source.omega();
    const double fraction = breakdown.total > 0.0 ? h.rate / breakdown.total : 0.0;
    t.rows.push_back({std::int64_t{h.m}, h.rate, power, fraction});
  }
  return t;
}

Table report_table(const std::string& command, const RunConfig& cfg, const PowerReport& r) {
  Table t;
  t.meta = standard_header(command, cfg);
  t.meta.emplace_back("regime_warning", r.regime_warning ? "true" : "false");
  t.meta.emplace_back("fine_tuned_branch", r.fine_tuned_branch ? "true" : "false");
  t.columns = {"name", "value", "reference", "ratio", "flagged", "note"};
  auto quantity = [&](const char* name, const std::optional<double>& v, const char* unit) {
    t.rows.push_back({std::string(name), opt(v), Cell{}, Cell{}, Cell{}, std::string(unit)});
  };
  quantity("P_E", r.P_E, "W");
  quantity("P_M", r.P_M, "W");
  quantity("P_G_paper", r.P_G_paper, "W");
  quantity("P_G_quadrupole", r.P_G_quadrupole, "W");
  quantity("pair_rate", r.pair_rate, "1/s");
  quantity("waiting_time", r.waiting_time_years, "yr");
  quantity("ratio_PM_PE", r.ratio_PM_PE, "");
  for (const auto& c : r.closed_form_vs_numeric) {
    t.rows.push_back({"check:" + c.name, c.value, c.reference, c.ratio,
                      std::string(c.flagged ? "true" : "false"), c.note});
  }
  return t;
}

Table cmd_power(const RunConfig& cfg, int threads) {
  ReportOptions opts;
  opts.quadrature = quadrature(cfg, threads);
  if (cfg.scenario == Scenario::Sphere) return report_table("power", cfg, crosscheck_report(*cfg.sphere, opts));
  auto t = report_table("power", cfg, crosscheck_report(BinarySystem(*cfg.binary), opts));
  add_meta(t, "metric_power_coefficient", metric_power_coefficient(BinarySystem(*cfg.binary).orbit()));
  return t;
}

Table cmd_compare(const RunConfig& cfg, int threads) {
  const auto sys = require_binary(cfg, "compare");
  ReportOptions opts;
  opts.quadrature = quadrature(cfg, threads);
  opts.include_numeric = false;
  const auto r = crosscheck_report(sys, opts);
  auto t = report_table("compare", cfg, r);
  add_meta(t, "metric_power_coefficient", metric_power_coefficient(sys.orbit()));
  if (r.P_G_paper && r.P_M && *r.P_M > 0.0) add_meta(t, "log10_PG_over_PM", std::log10(*r.P_G_paper / *r.P_M));
  return t;
}

Table cmd_spectrum(const RunConfig& cfg, int threads) {
  const auto source = make_source(cfg, "spectrum");
  const int m = single_harmonic(cfg, source);
  std::vector<double> grid(cfg.numerics.points);
  for (int i = 0; i < cfg.numerics.points; ++i) grid[i] = m * (i + 0.5) / cfg.numerics.points;
  const auto sp = spectrum(source, m, grid, cfg.numerics.order, threads);
  Table t;
  t.meta = standard_header("spectrum", cfg);
  t.meta.emplace_back("harmonic", std::to_string(m));
  t.columns = {"omega1_over_omega", "omega1_rad_s", "rate_per_omega1"};
  for (const auto& p : sp) t.rows.push_back({p.omega1_over_omega, p.omega1_over_omega * source.omega(), p.rate_per_omega1});
  return t;
}

Table cmd_angular(const RunConfig& cfg, int) {
  const auto source = make_source(cfg, "angular");
  const int m = single_harmonic(cfg, source);
  const int n = cfg.numerics.points;
  std::vector<double> chi(n), dens(n);
  double peak = 0.0;
  for (int i = 0; i < n; ++i) {
    chi[i] = -kPi / 2 + kPi * i / (n - 1);
    dens[i] = angular_density(source, m, chi[i], cfg.numerics.order);
    peak = std::max(peak, dens[i]);
  }
  Table t;
  t.meta = standard_header("angular", cfg);
  t.meta.emplace_back("harmonic", std::to_string(m));
  t.columns = {"chi_rad", "intensity", "rate_per_sr"};
  for (int i = 0; i < n; ++i) t.rows.push_back({chi[i], peak > 0.0 ? dens[i] / peak : 0.0, dens[i]});
  return t;
}

Table cmd_integrals(const RunConfig& cfg, int threads) {
  const auto d = dimensionless_integrals(quadrature(cfg, threads));
  const auto ie = mc_estimate(ie_weight(), cfg.numerics.mc_samples, cfg.numerics.seed, threads);
  const auto im = mc_estimate(im_weight(), cfg.numerics.mc_samples, cfg.numerics.seed + 1, threads);
  Table t;
  t.meta = standard_header("integrals", cfg);
  t.columns = {"name", "method", "value", "std_error", "n_evals"};
  auto row = [&](const char* name, const IntegralEstimate& e) {
    t.rows.push_back({std::string(name), std::string(to_string(e.method)), e.value, e.std_error,
                      static_cast<std::int64_t>(e.n_evals)});
  };
  row("IE", d.ie);
  row("IM", d.im);
  row("IE", ie);
  row("IM", im);
  return t;
}

Table cmd_sample(const RunConfig& cfg, int threads) {
  const auto source = make_source(cfg, "sample");
  const int m = single_harmonic(cfg, source);
  EnvelopeOptions eo;
  eo.threads = threads;
  const auto env = build_envelope(source, m, eo);
  SampleOptions so;
  so.threads = threads;
  const auto res = sample_pairs(source, m, cfg.numerics.events, cfg.numerics.seed, env, so);
  Table t;
  t.meta = standard_header("sample", cfg);
  t.meta.emplace_back("harmonic", std::to_string(m));
  t.meta.emplace_back("proposals", std::to_string(res.proposals));
  t.meta.emplace_back("accepted", std::to_string(res.accepted));
  add_meta(t, "envelope", res.envelope);
  add_meta(t, "acceptance_rate", res.acceptance_rate);
  add_meta(t, "rate_estimate_per_s", res.rate_estimate);
  add_meta(t, "rate_std_error_per_s", res.rate_std_error);
  t.columns = {"event", "m", "l1x", "l1y", "l1z", "l2x", "l2y", "l2z", "hel1", "hel2"};
  std::int64_t i = 0;
  for (const auto& e : res.events) {
    t.rows.push_back({i++, std::int64_t{e.m}, e.l1.x, e.l1.y, e.l1.z, e.l2.x, e.l2.y, e.l2.z,
                      std::string(1, to_char(e.helicities.first)), std::string(1, to_char(e.helicities.second))});
  }
  return t;
}

Table cmd_scan(const RunConfig& cfg, int threads) {
  if (!cfg.scan) fail(ErrorKind::ConfigError, "subcommand 'scan' needs a scan section");
  const auto& s = *cfg.scan;
  const auto q = quadrature(cfg, threads);
  Table t;
  t.meta = standard_header("scan", cfg);
  t.meta.emplace_back("parameter", s.parameter);
  const bool compare = cfg.scenario == Scenario::Compare;
  t.columns = compare ? std::vector<std::string>{s.parameter, "v_R", "P_E_W", "P_M_W", "P_G_W"}
                      : std::vector<std::string>{s.parameter, "v_R", "rate_per_s", "power_closed_W"};
  for (int i = 0; i < s.points; ++i) {
    const double f = static_cast<double>(i) / (s.points - 1);
    const double x = s.log_spacing ? s.start * std::pow(s.stop / s.start, f) : s.start + (s.stop - s.start) * f;
    RunConfig point = cfg;
    if (cfg.sphere) {
      auto& sc = *point.sphere;
      if (s.parameter == "omega_rad_s") sc.omega = x;
      else if (s.parameter == "period_s") sc.omega = kTwoPi / x;
      else sc.orbit_radius = x;
    } else {
      auto orbit = OrbitInput::from_omega(cfg.binary->orbit.total_mass, cfg.binary->orbit.mu,
                                          derive_orbit(cfg.binary->orbit).omega);
      if (s.parameter == "omega_rad_s") orbit.omega = x;
      else if (s.parameter == "period_s") orbit.omega = kTwoPi / x;
      else orbit.total_mass = x;
      point.binary = binary_for_orbit(cfg, orbit);
    }
    if (compare) {
      const BinarySystem sys(*point.binary);
      const auto g = graviton_power(sys.orbit());
      t.rows.push_back({x, sys.orbit().v_R, power_binary_dielectric_closed(sys).watts,
                        power_binary_metric_closed(sys).watts, g.paper});
      continue;
    }
    const auto source = make_source(point, "scan");
    const double rate = total_rate_numeric(source, harmonic_limit(point, source), q).total;
    double power = 0.0;
    switch (source.kind()) {
      case SourceKind::DielectricSphere: power = power_sphere_closed(*source.sphere_config()).watts; break;
      case SourceKind::BinaryDielectric: power = power_binary_dielectric_closed(*source.binary()).watts; break;
      case SourceKind::BinaryMetric: power = power_binary_metric_closed(*source.binary()).watts; break;
    }
    t.rows.push_back({x, source.v_R(), rate, power});
  }
  return t;
}

int resolve_thread_count(const std::optional<int>& flag, const RunConfig& cfg) {
  if (flag) return *flag;
  if (const char* env = std::getenv("PAIR_RADIANCE_THREADS"); env && *env) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (*end != '\0' || n < 1 || n > 1024) {
      fail(ErrorKind::ConfigError, std::string("PAIR_RADIANCE_THREADS must be an integer in [1, 1024], got '") + env + "'");
    }
    return static_cast<int>(n);
  }
  return cfg.numerics.threads.value_or(1);
}

}  // namespace

Table run_command(const std::string& command, const RunConfig& cfg, int threads) {
  if (command == "rate") return cmd_rate(cfg, threads);
  if (command == "power") return cmd_power(cfg, threads);
  if (command == "spectrum") return cmd_spectrum(cfg, threads);
  if (command == "angular") return cmd_angular(cfg, threads);
  if (command == "integrals") return cmd_integrals(cfg, threads);
  if (command == "sample") return cmd_sample(cfg, threads);
  if (command == "scan") return cmd_scan(cfg, threads);
  if (command == "compare") return cmd_compare(cfg, threads);
  fail(ErrorKind::ConfigError, "unknown subcommand '" + command + "'");
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NumericalFailure: return 3;
    case ErrorKind::IoError: return 4;
    default: return 2;
  }
}

int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Photon pair radiation from orbiting bodies", "pair-radiance"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1, 1);
  app.fallthrough();

  std::string config_path;
  std::optional<std::string> out_path;
  std::optional<std::string> format;
  std::optional<std::uint64_t> seed;
  std::optional<int> threads;
  std::optional<std::string> variant;
  app.add_option("--config", config_path, "JSON run configuration")->required();
  app.add_option("--out", out_path, "Output file (default: stdout or output.path)");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--seed", seed, "Random seed");
  app.add_option("--threads", threads, "Worker threads")->check(CLI::Range(1, 1024));
  app.add_option("--alpha-variant", variant, "Metric amplitude prefactor")->check(CLI::IsMember({"paper", "rederived"}));

  const std::vector<std::pair<const char*, const char*>> commands{
      {"rate", "Total pair rate and per-harmonic table"},
      {"power", "Closed-form powers with numeric cross-checks"},
      {"spectrum", "Single-photon energy spectrum"},
      {"angular", "Angular distribution of the pair direction"},
      {"integrals", "Dimensionless phase-space integrals"},
      {"sample", "Unweighted photon pair events"},
      {"scan", "Sweep one parameter"},
      {"compare", "Dielectric, metric and graviton powers"}};
  for (const auto& [name, help] : commands) app.add_subcommand(name, help);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  const std::string command = app.get_subcommands().front()->get_name();

  try {
    RunConfig cfg = parse_config(config_path);
    if (seed) cfg.numerics.seed = *seed;
    if (variant) cfg.alpha_variant = *variant == "paper" ? AlphaVariant::Paper : AlphaVariant::Rederived;
    if (format) cfg.output.format = *format == "json" ? Format::Json : Format::Csv;
    if (out_path) cfg.output.path = *out_path;
    const int n_threads = resolve_thread_count(threads, cfg);

    const Table table = run_command(command, cfg, n_threads);
    if (cfg.output.path) {
      std::ofstream file(*cfg.output.path, std::ios::binary | std::ios::trunc);
      if (!file) fail(ErrorKind::IoError, "cannot open output file " + *cfg.output.path);
      write_table(file, table, cfg.output.format);
      file.flush();
      if (!file) fail(ErrorKind::IoError, "error writing output file " + *cfg.output.path);
    } else {
      write_table(out, table, cfg.output.format);
    }
    return 0;
  } catch (const Error& e) {
    err << "pair-radiance: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    err << "pair-radiance: internal error: " << e.what() << '\n';
    return 3;
  }
}

}  // namespace pair_radiance::cli
