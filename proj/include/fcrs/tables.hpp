#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fcrs {

/// Column-ordered table of preformatted cells.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

enum class TableFormat { kCsv, kJson };

TableFormat parse_table_format(const std::string& name);

void write_table(const Table& table, TableFormat format, std::ostream& out);

/// Writes to `path`, or to `fallback` when path is empty. Throws Error on I/O failure.
void write_table(const Table& table, TableFormat format, const std::string& path, std::ostream& fallback);

}  // namespace fcrs
