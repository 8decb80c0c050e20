#pragma once

#include <string>
#include <string_view>

#include "kgu/harness.hpp"

namespace kgu {

enum class TableFormat { csv, json };

/// Throws Errc::invalid_parameter for names other than "csv" and "json".
TableFormat parse_format(std::string_view name);

/// CSV: header `scheme,c,tau,err_h1,wall_time_s` and one line per row.
/// JSON: {"rows": [...], "fitted_orders": [...], "certificates": [...]}.
/// Numbers use the shortest representation that round-trips; failed cells
/// are written as `nan` (CSV) or null (JSON).
std::string format_table(const ErrorTable& table, TableFormat format);

/// Writes format_table() to `path`; throws Errc::io_failure naming the path.
void emit(const ErrorTable& table, TableFormat format, const std::string& path);

/// Inverse of format_table(). CSV carries rows only.
ErrorTable parse_table(std::string_view text, TableFormat format);

}  // namespace kgu
