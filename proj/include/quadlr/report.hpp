#pragma once

#include <cstdio>
#include <cstdlib>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

namespace quadlr::report {

/// Column header. Numeric columns always carry a unit ("1" when
/// dimensionless); text columns leave it empty.
struct Column {
  std::string name;
  std::string unit;

  std::string header() const { return unit.empty() ? name : name + "[" + unit + "]"; }
};

using Cell = std::variant<std::monostate, long long, double, std::string>;

struct Section {
  std::string name;
  std::vector<Column> columns;
  std::vector<std::vector<Cell>> rows;
};

/// Result of one CLI command, renderable as CSV or JSON.
struct OutputRecord {
  std::string command;  // echo of the invocation
  std::string species;
  std::vector<Section> sections;
};

/// 12 significant digits; the CSV text and the JSON number share it.
inline std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

inline std::string csv_escape(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string cell_text(const Cell& c) {
  struct Visitor {
    std::string operator()(std::monostate) const { return {}; }
    std::string operator()(long long v) const { return std::to_string(v); }
    std::string operator()(double v) const { return format_number(v); }
    std::string operator()(const std::string& v) const { return csv_escape(v); }
  };
  return std::visit(Visitor{}, c);
}

inline std::string render_csv(const OutputRecord& rec) {
  std::string out = "# command: " + rec.command + "\n# species: " + rec.species + "\n";
  bool first = true;
  for (const auto& sec : rec.sections) {
    if (!first) out += "\n";
    first = false;
    out += "# section: " + sec.name + "\n";
    for (std::size_t i = 0; i < sec.columns.size(); ++i) out += (i ? "," : "") + csv_escape(sec.columns[i].header());
    out += "\n";
    for (const auto& row : sec.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + cell_text(row[i]);
      out += "\n";
    }
  }
  return out;
}

inline nlohmann::json to_json(const OutputRecord& rec) {
  using nlohmann::json;
  struct Visitor {
    json operator()(std::monostate) const { return nullptr; }
    json operator()(long long v) const { return v; }
    json operator()(double v) const { return std::strtod(format_number(v).c_str(), nullptr); }
    json operator()(const std::string& v) const { return v; }
  };

  json doc;
  doc["command"] = rec.command;
  doc["species"] = rec.species;
  doc["sections"] = json::array();
  for (const auto& sec : rec.sections) {
    json s;
    s["name"] = sec.name;
    s["columns"] = json::array();
    for (const auto& c : sec.columns) s["columns"].push_back({{"name", c.name}, {"unit", c.unit}});
    s["rows"] = json::array();
    for (const auto& row : sec.rows) {
      json r = json::array();
      for (const auto& cell : row) r.push_back(std::visit(Visitor{}, cell));
      s["rows"].push_back(std::move(r));
    }
    doc["sections"].push_back(std::move(s));
  }
  return doc;
}

inline std::string render_json(const OutputRecord& rec) { return to_json(rec).dump(2) + "\n"; }

}  // namespace quadlr::report
