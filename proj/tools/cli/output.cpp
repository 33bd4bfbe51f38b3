#include "output.hpp"

#include <cmath>
#include <cstdio>

#include "json.hpp"

namespace wedgeqed::cli {

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

void write_csv(const Table& t, std::ostream& os) {
  for (const auto& [k, v] : t.meta) os << "# " << k << ": " << v << '\n';
  for (const auto& c : t.columns) os << c << ',';
  os << "converged\n";
  for (const Row& r : t.rows) {
    for (double v : r.values) os << format_number(v) << ',';
    os << (r.converged ? 1 : 0) << '\n';
  }
}

void write_json(const Table& t, std::ostream& os) {
  nlohmann::ordered_json doc;
  nlohmann::ordered_json meta = nlohmann::ordered_json::object();
  for (const auto& [k, v] : t.meta) meta[k] = v;
  doc["meta"] = meta;
  doc["columns"] = t.columns;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const Row& r : t.rows) {
    nlohmann::ordered_json row = nlohmann::ordered_json::object();
    for (size_t i = 0; i < t.columns.size() && i < r.values.size(); ++i) {
      // JSON has no NaN; non-finite values only occur in flagged rows.
      if (std::isfinite(r.values[i])) {
        row[t.columns[i]] = r.values[i];
      } else {
        row[t.columns[i]] = nullptr;
      }
    }
    row["converged"] = r.converged;
    rows.push_back(std::move(row));
  }
  doc["rows"] = std::move(rows);
  os << doc.dump(2) << '\n';
}

void write_table(const Table& t, Format f, std::ostream& os) {
  if (f == Format::Json) {
    write_json(t, os);
  } else {
    write_csv(t, os);
  }
}

}  // namespace wedgeqed::cli
