#include "pair_radiance_cli/output.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "json.hpp"
#include "pair_radiance/units.hpp"
#include "pair_radiance_cli/version.hpp"

namespace pair_radiance::cli {

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::vector<std::pair<std::string, std::string>> standard_header(const std::string& command,
                                                                 const RunConfig& cfg) {
  using C = PhysicalConstants;
  char hash[17];
  std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(cfg.hash));
  return {
      {"program", "pair-radiance"},
      {"version", kVersion},
      {"command", command},
      {"scenario", std::string(to_string(cfg.scenario))},
      {"config_hash", std::string("fnv1a64:") + hash},
      {"seed", std::to_string(cfg.numerics.seed)},
      {"alpha_variant", std::string(to_string(cfg.alpha_variant))},
      {"G_m3_kg_s2", format_double(C::G)},
      {"c_m_s", format_double(C::c)},
      {"hbar_J_s", format_double(C::hbar)},
      {"M_sun_kg", format_double(C::M_sun)},
      {"year_s", format_double(C::seconds_per_year)},
  };
}

namespace {

std::string csv_cell(const Cell& c) {
  if (std::holds_alternative<double>(c)) return format_double(std::get<double>(c));
  if (std::holds_alternative<std::int64_t>(c)) return std::to_string(std::get<std::int64_t>(c));
  if (std::holds_alternative<std::string>(c)) {
    const auto& s = std::get<std::string>(c);
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) {
      if (ch == '"') q += '"';
      q += ch;
    }
    return q + "\"";
  }
  return "";
}

nlohmann::ordered_json json_cell(const Cell& c) {
  if (std::holds_alternative<double>(c)) {
    const double x = std::get<double>(c);
    if (!std::isfinite(x)) return format_double(x);
    return x;
  }
  if (std::holds_alternative<std::int64_t>(c)) return std::get<std::int64_t>(c);
  if (std::holds_alternative<std::string>(c)) return std::get<std::string>(c);
  return nullptr;
}

}  // namespace

void write_table(std::ostream& os, const Table& table, Format format) {
  if (format == Format::Csv) {
    for (const auto& [k, v] : table.meta) os << "# " << k << ": " << v << '\n';
    for (std::size_t i = 0; i < table.columns.size(); ++i) os << (i ? "," : "") << table.columns[i];
    os << '\n';
    for (const auto& row : table.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_cell(row[i]);
      os << '\n';
    }
    return;
  }
  nlohmann::ordered_json doc;
  auto& meta = doc["meta"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : table.meta) meta[k] = v;
  doc["columns"] = table.columns;
  auto& rows = doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    auto r = nlohmann::ordered_json::array();
    for (const auto& c : row) r.push_back(json_cell(c));
    rows.push_back(std::move(r));
  }
  os << doc.dump(2) << '\n';
}

}  // namespace pair_radiance::cli
