// Copyright 2026 The ptmoments Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ptm/qstate.hpp"

namespace ptm {

// Density matrices are exchanged as
//   {"dims": [2, 2], "re": [[...], ...], "im": [[...], ...]}
// with row-major nested arrays. "im" may be omitted for real matrices.

/// Parses and validates; FormatError on malformed input, InvariantError when
/// the matrix is not a state.
DensityMatrix density_matrix_from_json(std::string_view text);
/// IoError if the file cannot be read.
DensityMatrix load_density_matrix(const std::string& path);
std::string density_matrix_to_json(const DensityMatrix& rho);

/// Shortest round-trip text is not the goal: 15 significant digits, '.' as the
/// decimal separator regardless of locale. Non-finite values print as nan/inf.
std::string format_number(double value);

enum class TableFormat { Csv, Json };

/// Accepts "csv" and "json".
TableFormat table_format_from_string(std::string_view name);

using Cell = std::variant<double, std::int64_t, std::string>;

struct Table {
  std::string kind;  // schema name, e.g. "curves"
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
};

/// CSV: "# schema: ptm-<kind>/1", header, rows. JSON: array of row objects,
/// non-finite numbers as null.
void write_table(std::ostream& out, const Table& table, TableFormat format);

/// Writes to stdout when path is empty or "-"; IoError if the file cannot be written.
void write_table(const std::string& path, const Table& table, TableFormat format);

}  // namespace ptm
