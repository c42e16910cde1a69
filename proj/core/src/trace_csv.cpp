#include "subsat/trace_csv.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace subsat {

namespace csv {

std::string escape(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void write_row(std::ostream& out, const Row& row) {
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) out << ',';
    out << escape(row[i]);
  }
  out << "\r\n";
}

std::vector<Row> read(std::istream& in) {
  std::vector<Row> rows;
  Row row;
  std::string field;
  bool quoted = false;
  bool any = false;
  char c = 0;
  auto end_row = [&] {
    row.push_back(std::move(field));
    field.clear();
    rows.push_back(std::move(row));
    row.clear();
    any = false;
  };
  while (in.get(c)) {
    if (quoted) {
      if (c == '"') {
        if (in.peek() == '"') {
          in.get(c);
          field += '"';
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
      continue;
    }
    switch (c) {
      case '"':
        quoted = true;
        any = true;
        break;
      case ',':
        row.push_back(std::move(field));
        field.clear();
        any = true;
        break;
      case '\r':
        break;
      case '\n':
        end_row();
        break;
      default:
        field += c;
        any = true;
    }
  }
  if (quoted) throw std::invalid_argument("unterminated quoted CSV field");
  if (any || !field.empty() || !row.empty()) end_row();
  return rows;
}

std::string format_number(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc()) return "nan";
  return std::string(buf, ptr);
}

std::string format_fixed(double value, int decimals) {
  char buf[64];
  auto [ptr, ec] =
      std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::fixed, decimals);
  if (ec != std::errc()) return "nan";
  return std::string(buf, ptr);
}

}  // namespace csv

const csv::Row& trace_columns() {
  static const csv::Row columns = {
      "kind",          "iteration",     "m",           "q",
      "probes",        "sub_energy_before", "sub_energy_after", "accepted",
      "energy",        "best_energy",   "qubo_objective", "stop_reason",
      "select_us",     "optimize_us",   "compose_us"};
  return columns;
}

const std::vector<std::string>& trace_timing_columns() {
  static const std::vector<std::string> columns = {"select_us", "optimize_us", "compose_us"};
  return columns;
}

void write_trace_csv(const RunTrace& trace, std::ostream& out) {
  csv::write_row(out, trace_columns());
  double select_total = 0.0;
  double optimize_total = 0.0;
  double compose_total = 0.0;
  for (const IterationRecord& r : trace.iterations) {
    select_total += r.select_us;
    optimize_total += r.optimize_us;
    compose_total += r.compose_us;
    csv::write_row(out, {"iter", std::to_string(r.iteration), std::to_string(r.m),
                         r.q ? std::to_string(r.q) : "", r.probes ? std::to_string(r.probes) : "",
                         std::to_string(r.sub_energy_before), std::to_string(r.sub_energy_after),
                         r.accepted ? "1" : "0", std::to_string(r.energy),
                         std::to_string(r.best_energy),
                         r.qubo_objective ? csv::format_number(*r.qubo_objective) : "", "",
                         csv::format_fixed(r.select_us, 1), csv::format_fixed(r.optimize_us, 1),
                         csv::format_fixed(r.compose_us, 1)});
  }
  csv::write_row(out, {"summary", std::to_string(trace.iterations_run), "", "", "", "", "", "",
                       std::to_string(trace.best_energy), std::to_string(trace.best_energy), "",
                       to_string(trace.stop_reason), csv::format_fixed(select_total, 1),
                       csv::format_fixed(optimize_total, 1), csv::format_fixed(compose_total, 1)});
}

std::vector<csv::Row> drop_columns(const std::vector<csv::Row>& rows,
                                   const std::vector<std::string>& columns) {
  if (rows.empty()) return rows;
  std::vector<bool> keep(rows[0].size(), true);
  for (std::size_t i = 0; i < rows[0].size(); ++i) {
    keep[i] = std::find(columns.begin(), columns.end(), rows[0][i]) == columns.end();
  }
  std::vector<csv::Row> out;
  out.reserve(rows.size());
  for (const csv::Row& row : rows) {
    csv::Row kept;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i >= keep.size() || keep[i]) kept.push_back(row[i]);
    }
    out.push_back(std::move(kept));
  }
  return out;
}

}  // namespace subsat
