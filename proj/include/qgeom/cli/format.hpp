#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace qgeom::cli {

using Json = nlohmann::ordered_json;

enum class Format { Csv, Json };

// A table cell. monostate renders as an empty CSV field / JSON null.
using Cell = std::variant<std::monostate, double, std::int64_t, bool, std::string, Json>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

// 12 significant digits, shortest form ("%.12g").
std::string format_number(double x);

// Value rounded to 12 significant digits, so JSON and CSV carry the same
// number.
double round12(double x);

Json cell_to_json(const Cell& cell);

// Header row plus one line per row, LF terminated. Fields containing
// commas or quotes are quoted.
std::string render_csv(const Table& table);

// {"command": ..., <first row fields>} when single_record, otherwise
// {"command": ..., "rows": [{...}, ...]}; extra keys are merged at top level.
std::string render_json(const std::string& command, const Table& table, bool single_record,
                        const Json& extra = Json::object());

}  // namespace qgeom::cli
