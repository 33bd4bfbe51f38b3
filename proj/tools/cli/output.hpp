#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace wedgeqed::cli {

struct Row {
  std::vector<double> values;
  bool converged = true;
};

struct Table {
  std::vector<std::pair<std::string, std::string>> meta;
  std::vector<std::string> columns;  // excluding the trailing converged flag
  std::vector<Row> rows;
};

enum class Format { Csv, Json };

/// 17 significant digits in scientific notation, independent of locale.
std::string format_number(double v);

/// '#'-prefixed "key: value" metadata, a header line, then one line per row
/// ending in a 0/1 converged column.
void write_csv(const Table& t, std::ostream& os);

void write_json(const Table& t, std::ostream& os);

void write_table(const Table& t, Format f, std::ostream& os);

}  // namespace wedgeqed::cli
