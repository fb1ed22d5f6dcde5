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

#ifndef RESOPT_TABLE_IO_HPP_
#define RESOPT_TABLE_IO_HPP_

#include <filesystem>
#include <string>
#include <vector>

namespace resopt {

// Numeric rows of a delimited text file. Fields are separated by commas,
// semicolons or whitespace; blank lines and lines starting with '#' are
// skipped, and a first row that does not parse as numbers is kept as the
// header.
struct NumericTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

// Throws ConfigError if the file is missing or a data row has a malformed
// field or a different field count than the first data row.
NumericTable read_numeric_table(const std::filesystem::path& path);

// Two-column (index, value) series. The value column is returned in file
// order; index values must be 0, 1, 2, ... (ConfigError otherwise).
std::vector<double> read_series(const std::filesystem::path& path);

// Shortest round-trip decimal representation, so written files are both exact
// and byte-stable.
std::string format_number(double value);

}  // namespace resopt

#endif  // RESOPT_TABLE_IO_HPP_
