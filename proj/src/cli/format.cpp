#include "qgeom/cli/format.hpp"

#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace qgeom::cli {

namespace {

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

std::string cell_to_csv(const Cell& cell) {
  struct Visitor {
    std::string operator()(std::monostate) const { return ""; }
    std::string operator()(double x) const { return format_number(x); }
    std::string operator()(std::int64_t x) const { return std::to_string(x); }
    std::string operator()(bool x) const { return x ? "true" : "false"; }
    std::string operator()(const std::string& s) const { return csv_escape(s); }
    std::string operator()(const Json& j) const { return csv_escape(j.dump()); }
  };
  return std::visit(Visitor{}, cell);
}

}  // namespace

std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

double round12(double x) { return std::strtod(format_number(x).c_str(), nullptr); }

Json cell_to_json(const Cell& cell) {
  struct Visitor {
    Json operator()(std::monostate) const { return nullptr; }
    Json operator()(double x) const { return round12(x); }
    Json operator()(std::int64_t x) const { return x; }
    Json operator()(bool x) const { return x; }
    Json operator()(const std::string& s) const { return s; }
    Json operator()(const Json& j) const { return j; }
  };
  return std::visit(Visitor{}, cell);
}

std::string render_csv(const Table& table) {
  std::string out;
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c) out += ',';
    out += csv_escape(table.columns[c]);
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ',';
      out += cell_to_csv(row[c]);
    }
    out += '\n';
  }
  return out;
}

std::string render_json(const std::string& command, const Table& table, bool single_record,
                        const Json& extra) {
  const auto record = [&](const std::vector<Cell>& row) {
    Json obj = Json::object();
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      obj[table.columns[c]] = cell_to_json(row.at(c));
    }
    return obj;
  };

  Json doc = Json::object();
  doc["command"] = command;
  for (const auto& [key, value] : extra.items()) doc[key] = value;
  if (single_record) {
    if (table.rows.size() != 1) throw std::logic_error("render_json: expected exactly one row");
    const Json fields = record(table.rows.front());
    for (const auto& [key, value] : fields.items()) doc[key] = value;
  } else {
    Json rows = Json::array();
    for (const auto& row : table.rows) rows.push_back(record(row));
    doc["rows"] = std::move(rows);
  }
  return doc.dump(2) + "\n";
}

}  // namespace qgeom::cli
