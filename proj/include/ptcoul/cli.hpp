// Copyright 2026 The ptcoul Authors
// SPDX-License-Identifier: Apache-2.0

// Command-line front end: report tables, CSV/JSON writers, verification
// suites and the argv dispatcher behind the `ptcoul` tool.

#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace ptcoul::cli {

enum class Format { kCsv, kJson };

using Cell = std::variant<double, long long, bool, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

struct Check {
  std::string name;
  bool passed = false;
  double measured = 0.0;
  double expected = 0.0;
  double tolerance = 0.0;
};

struct Report {
  std::string command;
  std::vector<std::pair<std::string, Cell>> params;
  Table results;
  std::vector<Check> checks;
};

/// 12 significant digits, '.' decimal separator, no locale.
std::string format_number(double value);

/// Checks rendered as a table (name, status, measured, expected, tolerance).
Table checks_table(const std::vector<Check>& checks);

/// Header row plus one newline-terminated line per row. A report without a
/// results table writes its checks table instead.
void write_csv(const Report& report, std::ostream& out);

/// {"command", "params", "results", "checks"}; results is an array of objects
/// keyed by column name.
void write_json(const Report& report, std::ostream& out);

/// Named verification suite: paper-n4, paper-n6, metrics-n2, metrics-n4,
/// continuum, or all. Throws std::invalid_argument for an unknown name.
std::vector<Check> verify_suite(const std::string& suite);

/// Known suite names, `all` last.
const std::vector<std::string>& suite_names();

/// Parses argv and runs one command. Exit code 0 on success, 1 on a domain
/// error or failed verification, 2 on a usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ptcoul::cli
