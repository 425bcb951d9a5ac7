// Copyright 2026 The ptcoul Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <type_traits>

#include "json.hpp"
#include "ptcoul/cli.hpp"

namespace ptcoul::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string csv_cell(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) {
          return format_number(v);
        } else if constexpr (std::is_same_v<T, long long>) {
          return std::to_string(v);
        } else if constexpr (std::is_same_v<T, bool>) {
          return v ? "1" : "0";
        } else {
          return quote(v);
        }
      },
      cell);
}

Json rounded(double v) {
  if (!std::isfinite(v)) return nullptr;
  return std::stod(format_number(v));
}

Json json_cell(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> Json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) {
          return rounded(v);
        } else {
          return v;
        }
      },
      cell);
}

}  // namespace

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.12g", value);
  return buffer;
}

Table checks_table(const std::vector<Check>& checks) {
  Table t;
  t.columns = {"check", "status", "measured", "expected", "tolerance"};
  for (const auto& c : checks) {
    t.rows.push_back(
        {c.name, std::string(c.passed ? "pass" : "FAIL"), c.measured, c.expected, c.tolerance});
  }
  return t;
}

void write_csv(const Report& report, std::ostream& out) {
  const Table& table =
      report.results.columns.empty() ? checks_table(report.checks) : report.results;
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    out << (i ? "," : "") << quote(table.columns[i]);
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_cell(row[i]);
    out << '\n';
  }
}

void write_json(const Report& report, std::ostream& out) {
  Json doc;
  doc["command"] = report.command;
  Json params = Json::object();
  for (const auto& [key, value] : report.params) params[key] = json_cell(value);
  doc["params"] = params;
  Json results = Json::array();
  for (const auto& row : report.results.rows) {
    Json obj = Json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      obj[report.results.columns[i]] = json_cell(row[i]);
    }
    results.push_back(obj);
  }
  doc["results"] = results;
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"passed", c.passed},
                      {"measured", rounded(c.measured)},
                      {"expected", rounded(c.expected)},
                      {"tolerance", rounded(c.tolerance)}});
  }
  doc["checks"] = checks;
  out << doc.dump(2) << '\n';
}

}  // namespace ptcoul::cli
