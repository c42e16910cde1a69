#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "subsat/solver.hpp"

namespace subsat {

namespace csv {

using Row = std::vector<std::string>;

/// Quotes a field when it contains a comma, quote, CR or LF (RFC 4180).
[[nodiscard]] std::string escape(std::string_view field);
void write_row(std::ostream& out, const Row& row);
/// Parses RFC 4180 text, including quoted fields with embedded newlines.
/// Throws std::invalid_argument on an unterminated quote.
[[nodiscard]] std::vector<Row> read(std::istream& in);

/// Shortest round-tripping decimal for a double ("3", "0.5", "1e-07").
[[nodiscard]] std::string format_number(double value);
/// Fixed-point with the given decimals.
[[nodiscard]] std::string format_fixed(double value, int decimals);

}  // namespace csv

/// Column set of a run trace CSV: one `iter` row per outer iteration and a
/// final `summary` row carrying the best energy and stop reason.
[[nodiscard]] const csv::Row& trace_columns();

/// Columns holding wall-clock measurements; they are the only fields that
/// differ between repeated seeded runs.
[[nodiscard]] const std::vector<std::string>& trace_timing_columns();

void write_trace_csv(const RunTrace& trace, std::ostream& out);

/// Drops the named columns from parsed CSV rows (header in row 0).
[[nodiscard]] std::vector<csv::Row> drop_columns(const std::vector<csv::Row>& rows,
                                                 const std::vector<std::string>& columns);

}  // namespace subsat
