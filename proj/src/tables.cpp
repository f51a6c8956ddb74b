#include "fcrs/tables.hpp"

#include "fcrs/errors.hpp"

#include "json.hpp"

#include <fstream>

namespace fcrs {

TableFormat parse_table_format(const std::string& name) {
  if (name == "csv") return TableFormat::kCsv;
  if (name == "json") return TableFormat::kJson;
  throw ParameterError("unknown table format '" + name + "' (expected csv or json)");
}

void write_table(const Table& table, TableFormat format, std::ostream& out) {
  for (const auto& row : table.rows)
    if (row.size() != table.columns.size()) throw ParameterError("table row width does not match header");

  if (format == TableFormat::kCsv) {
    for (std::size_t c = 0; c < table.columns.size(); ++c) out << (c ? "," : "") << table.columns[c];
    out << '\n';
    for (const auto& row : table.rows) {
      for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << row[c];
      out << '\n';
    }
    return;
  }
  // Cells stay strings so that numeric formatting is identical to the CSV.
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t c = 0; c < row.size(); ++c) obj[table.columns[c]] = row[c];
    rows.push_back(std::move(obj));
  }
  out << nlohmann::ordered_json{{"columns", table.columns}, {"rows", rows}}.dump(2) << '\n';
}

void write_table(const Table& table, TableFormat format, const std::string& path, std::ostream& fallback) {
  if (path.empty()) {
    write_table(table, format, fallback);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path + " for writing");
  write_table(table, format, out);
  out.flush();
  if (!out) throw Error("failed writing " + path);
}

}  // namespace fcrs
