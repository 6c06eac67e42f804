#pragma once

// Tabular output shared by the subcommands: CSV with a leading comment line
// carrying the tool version and resolved config, or a JSON document.

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

namespace msd::cli {

using Cell = std::variant<std::monostate, double, std::uint64_t, bool, std::string>;

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add(std::vector<Cell> row) { rows.push_back(std::move(row)); }
};

enum class Format { Csv, Json };

std::string format_double(double v);

/// Renders tables into one document. CSV places every table after the
/// header comment; tables other than the first are introduced by a
/// "# table: <name>" line.
std::string render(const std::vector<Table>& tables, const nlohmann::json& config,
                   Format format);

/// Writes `content` to `path` through a temporary file and rename.
void write_atomically(const std::string& path, const std::string& content);

}  // namespace msd::cli
