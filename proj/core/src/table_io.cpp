#include "kgu/table_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "kgu/error.hpp"

namespace kgu {
namespace {

using nlohmann::json;

constexpr std::string_view csv_header = "scheme,c,tau,err_h1,wall_time_s";

std::string number(double x) {
  if (std::isnan(x)) return "nan";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

double parse_number(std::string_view s) {
  if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  double x = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), x);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size())
    throw Error(Errc::invalid_parameter, "malformed number '" + std::string(s) + "'");
  return x;
}

json number_json(double x) { return std::isnan(x) ? json(nullptr) : json(x); }

double json_number(const json& j) {
  return j.is_null() ? std::numeric_limits<double>::quiet_NaN() : j.get<double>();
}

std::string to_csv(const ErrorTable& table) {
  std::string out(csv_header);
  out += '\n';
  for (const auto& row : table.rows) {
    out += scheme_name(row.scheme);
    for (double x : {row.c, row.tau, row.err, row.wall_time}) {
      out += ',';
      out += number(x);
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const ErrorTable& table) {
  json j;
  j["rows"] = json::array();
  for (const auto& row : table.rows)
    j["rows"].push_back({{"scheme", scheme_name(row.scheme)},
                         {"c", row.c},
                         {"tau", row.tau},
                         {"err_h1", number_json(row.err)},
                         {"wall_time_s", row.wall_time}});
  j["fitted_orders"] = json::array();
  for (const auto& [key, slope] : table.fitted_orders)
    j["fitted_orders"].push_back(
        {{"scheme", scheme_name(key.first)}, {"c", key.second}, {"order", number_json(slope)}});
  j["certificates"] = json::array();
  for (const auto& [c, cert] : table.certificates)
    j["certificates"].push_back({{"c", c}, {"certificate", number_json(cert)}});
  return j.dump(2) + '\n';
}

ErrorTable from_csv(std::string_view text) {
  ErrorTable table;
  std::size_t pos = 0;
  bool header = true;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (header) {
      if (line != csv_header)
        throw Error(Errc::invalid_parameter, "unexpected CSV header '" + std::string(line) + "'");
      header = false;
      continue;
    }
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    for (std::size_t comma; (comma = line.find(',', start)) != std::string_view::npos;
         start = comma + 1)
      fields.push_back(line.substr(start, comma - start));
    fields.push_back(line.substr(start));
    if (fields.size() != 5)
      throw Error(Errc::invalid_parameter, "CSV row needs 5 fields: '" + std::string(line) + "'");
    table.rows.push_back({parse_scheme(fields[0]), parse_number(fields[1]),
                          parse_number(fields[2]), parse_number(fields[3]),
                          parse_number(fields[4])});
  }
  if (header) throw Error(Errc::invalid_parameter, "missing CSV header");
  return table;
}

ErrorTable from_json(std::string_view text) {
  ErrorTable table;
  try {
    const json j = json::parse(text);
    for (const auto& r : j.at("rows"))
      table.rows.push_back({parse_scheme(r.at("scheme").get<std::string>()),
                            r.at("c").get<double>(), r.at("tau").get<double>(),
                            json_number(r.at("err_h1")), r.at("wall_time_s").get<double>()});
    for (const auto& f : j.at("fitted_orders"))
      table.fitted_orders[{parse_scheme(f.at("scheme").get<std::string>()),
                           f.at("c").get<double>()}] = json_number(f.at("order"));
    for (const auto& c : j.at("certificates"))
      table.certificates[c.at("c").get<double>()] = json_number(c.at("certificate"));
  } catch (const json::exception& e) {
    throw Error(Errc::invalid_parameter, std::string("malformed table JSON: ") + e.what());
  }
  return table;
}

}  // namespace

TableFormat parse_format(std::string_view name) {
  if (name == "csv") return TableFormat::csv;
  if (name == "json") return TableFormat::json;
  throw Error(Errc::invalid_parameter, "unknown format '" + std::string(name) + "'");
}

std::string format_table(const ErrorTable& table, TableFormat format) {
  return format == TableFormat::csv ? to_csv(table) : to_json(table);
}

void emit(const ErrorTable& table, TableFormat format, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::io_failure, "cannot open '" + path + "' for writing");
  out << format_table(table, format);
  out.flush();
  if (!out) throw Error(Errc::io_failure, "failed writing '" + path + "'");
}

ErrorTable parse_table(std::string_view text, TableFormat format) {
  return format == TableFormat::csv ? from_csv(text) : from_json(text);
}

}  // namespace kgu
