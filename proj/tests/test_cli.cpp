#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "pair_radiance/errors.hpp"
#include "pair_radiance_cli/commands.hpp"

using namespace pair_radiance;
using namespace pair_radiance::cli;

namespace {

const std::string kDir = PAIR_RADIANCE_TEST_DIR;

const char* kMetric = R"({
  "scenario": "binary_metric",
  "system": {"mass_kg": 3.97784e30, "mu": 0.5, "period_s": 3600,
             "radius1_m": 1e4, "radius2_m": 1e4},
  "numerics": {"order": 12, "mc_samples": 20000, "points": 5, "events": 200}
})";

const char* kSphere = R"({
  "scenario": "sphere",
  "system": {"radius_m": 0.3, "kappa": -0.5, "orbit_radius_m": 30, "omega_rad_s": 1e4},
  "numerics": {"order": 12, "events": 300, "points": 7}
})";

std::string write_file(const std::string& name, const std::string& text) {
  const std::string path = kDir + "/" + name;
  std::ofstream(path, std::ios::binary) << text;
  return path;
}

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "pair-radiance");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  const int code = main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string config_error(const std::string& text) {
  try {
    parse_config_text(text);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ConfigError);
    return e.what();
  }
  FAIL("config was accepted");
  return "";
}

/// Data rows of a CSV artifact (comment and header lines dropped).
std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (header) {
      header = false;
      continue;
    }
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

}  // namespace

TEST_CASE("minimal binary_metric config gets defaults") {
  const auto cfg = parse_config_text(R"({"scenario": "binary_metric",
    "system": {"mass_kg": 3.97784e30, "mu": 0.5, "period_s": 3600, "radius1_m": 1e4, "radius2_m": 1e4}})");
  CHECK(cfg.scenario == Scenario::BinaryMetric);
  REQUIRE(cfg.binary.has_value());
  CHECK(cfg.binary->kappa1 == 0.0);
  CHECK(cfg.binary->rho1 > 0.0);
  CHECK(cfg.numerics.order == 32);
  CHECK(cfg.numerics.seed == 1);
  CHECK(cfg.output.format == Format::Csv);
  CHECK(cfg.alpha_variant == AlphaVariant::Paper);
  CHECK_FALSE(cfg.output.path.has_value());
}

TEST_CASE("config validation names keys and collects every error") {
  const auto mu = config_error(R"({"scenario": "binary_metric",
    "system": {"mass_kg": 4e30, "mu": 1.5, "period_s": 3600, "radius1_m": 1e4, "radius2_m": 1e4}})");
  CHECK(mu.find("system.mu") != std::string::npos);
  CHECK(mu.find("(0,1)") != std::string::npos);

  const auto overlap = config_error(R"({"scenario": "binary_metric",
    "system": {"mass_kg": 3.97784e30, "mu": 0.5, "period_s": 3600, "radius1_m": 3e8, "radius2_m": 3e8}})");
  CHECK(overlap.find("non-overlap") != std::string::npos);

  const auto many = config_error(R"({"scenario": "binary_metric", "colour": 1,
    "system": {"mass_kg": -1, "mu": 0.5, "period_s": 3600, "radius1_m": 1e4},
    "numerics": {"order": "high"}, "output": {"format": "xml"}})");
  CHECK(many.find("colour: unknown key") != std::string::npos);
  CHECK(many.find("system.mass_kg: must be > 0") != std::string::npos);
  CHECK(many.find("system.radius2_m: missing required key") != std::string::npos);
  CHECK(many.find("numerics.order: must be an integer") != std::string::npos);
  CHECK(many.find("output.format") != std::string::npos);

  CHECK(config_error(R"({"scenario": "sphere", "system": {"radius_m": 1, "kappa": -0.5,
    "orbit_radius_m": 10, "omega_rad_s": 1, "period_s": 6}})").find("not both") != std::string::npos);
  CHECK(config_error(R"({"scenario": "sphere", "system": {"radius_m": 1, "kappa": -0.5,
    "orbit_radius_m": 10, "omega_rad_s": 1, "spin": 2}})").find("system.spin: unknown key") != std::string::npos);
  CHECK(config_error("{not json").find("not valid JSON") != std::string::npos);
  CHECK(config_error(R"({"scenario": "torus", "system": {}})").find("scenario: must be one of") != std::string::npos);
  // Explicit densities must match the masses.
  CHECK(config_error(R"({"scenario": "binary_dielectric",
    "system": {"mass_kg": 3.97784e30, "mu": 0.5, "period_s": 3600, "radius1_m": 1e4, "radius2_m": 1e4,
               "density1_kg_m3": 1000, "density2_kg_m3": 1000}})").find("density1_kg_m3") != std::string::npos);
}

TEST_CASE("exit codes") {
  const auto good = write_file("metric.json", kMetric);
  CHECK(run({"integrals", "--config", kDir + "/missing.json"}).code == 4);
  CHECK(run({"integrals", "--config", write_file("bad.json", "{\"scenario\": 3}")}).code == 2);
  CHECK(run({"integrals"}).code == 2);
  CHECK(run({"frobnicate", "--config", good}).code == 2);
  CHECK(run({"integrals", "--config", good, "--format", "xml"}).code == 2);
  CHECK(run({"integrals", "--config", good, "--out", kDir + "/no/such/dir/out.csv"}).code == 4);
  const auto cmp = write_file("compare.json", std::string(kMetric).replace(std::string(kMetric).find("binary_metric"), 13, "compare"));
  const auto r = run({"rate", "--config", cmp});
  CHECK(r.code == 2);
  CHECK(r.err.find("config-error") != std::string::npos);
  const auto scan_missing = run({"scan", "--config", good});
  CHECK(scan_missing.code == 2);
  // Invalid thread environment variable.
  setenv("PAIR_RADIANCE_THREADS", "zero", 1);
  CHECK(run({"integrals", "--config", good}).code == 2);
  unsetenv("PAIR_RADIANCE_THREADS");
}

TEST_CASE("every artifact carries the self-describing header") {
  const auto cfg = write_file("metric.json", kMetric);
  const auto r = run({"integrals", "--config", cfg, "--seed", "9", "--alpha-variant", "rederived"});
  REQUIRE(r.code == 0);
  for (const char* key : {"# version: 0.1.0", "# config_hash: fnv1a64:", "# seed: 9", "# alpha_variant: rederived",
                          "# G_m3_kg_s2: 6.6743e-11", "# c_m_s: 299792458", "# hbar_J_s: 1.054571817e-34",
                          "# M_sun_kg: 1.98892e+30"}) {
    CHECK_MESSAGE(r.out.find(key) != std::string::npos, key);
  }
  const auto j = run({"integrals", "--config", cfg, "--format", "json"});
  REQUIRE(j.code == 0);
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["meta"]["alpha_variant"] == "paper");
  CHECK(doc["columns"][2] == "value");
  CHECK(doc["rows"].size() == 4);
}

TEST_CASE("integrals output is byte-identical across runs and thread counts") {
  const auto cfg = write_file("metric.json", kMetric);
  const auto a = run({"integrals", "--config", cfg});
  const auto b = run({"integrals", "--config", cfg});
  const auto c = run({"integrals", "--config", cfg, "--threads", "3"});
  setenv("PAIR_RADIANCE_THREADS", "2", 1);
  const auto d = run({"integrals", "--config", cfg});
  unsetenv("PAIR_RADIANCE_THREADS");
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);
  CHECK(a.out == d.out);
  const auto rows = csv_rows(a.out);
  REQUIRE(rows.size() == 4);
  CHECK(std::stod(rows[0][2]) == doctest::Approx(0.5570147104671243).epsilon(1e-10));
}

TEST_CASE("power on the reference binary") {
  const auto cfg = write_file("metric.json", kMetric);
  const auto r = run({"power", "--config", cfg});
  REQUIRE(r.code == 0);
  const auto pos = r.out.find("# metric_power_coefficient: ");
  REQUIRE(pos != std::string::npos);
  const double coeff = std::stod(r.out.substr(pos + 28));
  CHECK(coeff == doctest::Approx(5.4e-27).epsilon(0.1));
  bool found = false;
  for (const auto& row : csv_rows(r.out)) {
    if (row[0] == "waiting_time") {
      found = true;
      CHECK(std::stod(row[1]) > 1e22);
    }
  }
  CHECK(found);
}

TEST_CASE("scan over omega emits monotone v_R") {
  std::string text = kMetric;
  text.insert(text.rfind('}'), R"(, "scan": {"parameter": "omega_rad_s", "start": 1e-3, "stop": 1e-2, "points": 5})");
  const auto r = run({"scan", "--config", write_file("scan.json", text)});
  REQUIRE(r.code == 0);
  const auto rows = csv_rows(r.out);
  REQUIRE(rows.size() == 5);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK(std::stod(rows[i][1]) > std::stod(rows[i - 1][1]));
    CHECK(std::stod(rows[i][2]) > std::stod(rows[i - 1][2]));
  }
}

TEST_CASE("sample, spectrum, angular, rate and compare") {
  const auto sphere = write_file("sphere.json", kSphere);
  const auto out_path = kDir + "/events.csv";
  const auto s = run({"sample", "--config", sphere, "--out", out_path, "--seed", "4"});
  REQUIRE(s.code == 0);
  std::ifstream in(out_path);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str().find("\nevent,m,l1x,l1y,l1z,l2x,l2y,l2z,hel1,hel2\n") != std::string::npos);
  CHECK(csv_rows(ss.str()).size() == 300);
  const auto s3 = run({"sample", "--config", sphere, "--seed", "4", "--threads", "3"});
  CHECK(s3.out == ss.str());

  const auto sp = run({"spectrum", "--config", sphere});
  REQUIRE(sp.code == 0);
  CHECK(csv_rows(sp.out).size() == 7);
  const auto an = run({"angular", "--config", sphere});
  REQUIRE(an.code == 0);
  const auto arows = csv_rows(an.out);
  REQUIRE(arows.size() == 7);
  CHECK(std::stod(arows[0][1]) == 0.0);
  CHECK(std::stod(arows[3][1]) == 1.0);
  const auto rt = run({"rate", "--config", sphere});
  REQUIRE(rt.code == 0);
  CHECK(rt.out.find("# m_max: ") != std::string::npos);

  const auto metric = write_file("metric.json", kMetric);
  const auto cmp = run({"compare", "--config", metric});
  REQUIRE(cmp.code == 0);
  CHECK(cmp.out.find("P_G_quadrupole") != std::string::npos);
}

TEST_CASE("the installed binary reports exit codes") {
  const std::string bin = PAIR_RADIANCE_BIN;
  const auto good = write_file("metric.json", kMetric);
  auto status = [&](const std::string& args) {
    const int raw = std::system((bin + " " + args + " >/dev/null 2>&1").c_str());
    return WEXITSTATUS(raw);
  };
  CHECK(status("integrals --config " + good) == 0);
  CHECK(status("integrals --config " + kDir + "/missing.json") == 4);
  CHECK(status("integrals --config " + write_file("mu.json", R"({"scenario": "binary_metric",
    "system": {"mass_kg": 4e30, "mu": 1.5, "period_s": 3600, "radius1_m": 1e4, "radius2_m": 1e4}})")) == 2);
}
