#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "pair_radiance_cli/config.hpp"

namespace pair_radiance::cli {

using Cell = std::variant<std::monostate, double, std::int64_t, std::string>;

struct Table {
  /// Ordered key/value pairs written ahead of the rows.
  std::vector<std::pair<std::string, std::string>> meta;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// Shortest decimal string that reads back to the same double.
std::string format_double(double x);

/// Header shared by every artifact: version, config hash, seed, constants and
/// the alpha prefactor variant.
std::vector<std::pair<std::string, std::string>> standard_header(const std::string& command,
                                                                 const RunConfig& cfg);

/// CSV: "# key: value" comment lines, a header row, then data rows.
/// JSON: {"meta": {...}, "columns": [...], "rows": [[...], ...]}.
void write_table(std::ostream& os, const Table& table, Format format);

}  // namespace pair_radiance::cli
