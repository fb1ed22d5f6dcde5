// Copyright 2026 The resopt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "resopt/table_io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "resopt/errors.hpp"

namespace resopt {
namespace {

std::vector<std::string> split_fields(std::string line) {
  for (char& c : line) {
    if (c == ',' || c == ';') c = ' ';
  }
  std::vector<std::string> fields;
  std::istringstream in(line);
  for (std::string f; in >> f;) fields.push_back(std::move(f));
  return fields;
}

bool parse_double(const std::string& s, double& out) {
  const char* begin = s.data();
  const char* end = s.data() + s.size();
  if (begin != end && *begin == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, end, out);
  return ec == std::errc() && ptr == end;
}

}  // namespace

NumericTable read_numeric_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path.string());
  NumericTable table;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto fields = split_fields(line);
    std::vector<double> row(fields.size());
    bool numeric = true;
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (!parse_double(fields[i], row[i]) || !std::isfinite(row[i])) {
        numeric = false;
        break;
      }
    }
    if (!numeric) {
      if (table.rows.empty() && table.header.empty()) {
        table.header = fields;
        continue;
      }
      throw ConfigError(fmt::format("{}:{}: malformed numeric field", path.string(), line_no));
    }
    if (!table.rows.empty() && row.size() != table.rows.front().size()) {
      throw ConfigError(fmt::format("{}:{}: expected {} fields, got {}", path.string(), line_no,
                                    table.rows.front().size(), row.size()));
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::vector<double> read_series(const std::filesystem::path& path) {
  const NumericTable table = read_numeric_table(path);
  std::vector<double> values;
  values.reserve(table.rows.size());
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const auto& row = table.rows[i];
    if (row.size() != 2) {
      throw ConfigError(path.string() + ": series files have two columns (index, value)");
    }
    if (row[0] != static_cast<double>(i)) {
      throw ConfigError(fmt::format("{}: row {} has index {}, expected {}", path.string(), i,
                                    format_number(row[0]), i));
    }
    values.push_back(row[1]);
  }
  return values;
}

std::string format_number(double value) { return fmt::format("{}", value); }

}  // namespace resopt
