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

#include "ptm/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "ptm/error.hpp"

namespace ptm {
namespace {

using nlohmann::json;

std::vector<std::vector<double>> read_real_rows(const json& j, const char* key) {
  if (!j.is_array()) throw FormatError(std::string("\"") + key + "\" must be an array of rows");
  std::vector<std::vector<double>> rows;
  rows.reserve(j.size());
  for (const auto& row : j) {
    if (!row.is_array()) throw FormatError(std::string("\"") + key + "\" rows must be arrays");
    auto& out = rows.emplace_back();
    out.reserve(row.size());
    for (const auto& x : row) {
      if (!x.is_number()) throw FormatError(std::string("\"") + key + "\" entries must be numbers");
      out.push_back(x.get<double>());
    }
  }
  return rows;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

DensityMatrix density_matrix_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw FormatError("density matrix JSON must be an object");
  if (!j.contains("re")) throw FormatError("density matrix JSON lacks \"re\"");

  const auto re = read_real_rows(j["re"], "re");
  const std::size_t n = re.size();
  std::vector<std::vector<double>> im;
  if (j.contains("im")) im = read_real_rows(j["im"], "im");
  else im.assign(n, std::vector<double>(n, 0.0));

  if (n == 0) throw FormatError("density matrix is empty");
  if (im.size() != n) throw FormatError("\"re\" and \"im\" differ in shape");
  std::size_t cols = re.front().size();
  ComplexMatrix m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < n; ++r) {
    if (re[r].size() != cols || im[r].size() != cols) {
      throw FormatError("ragged matrix rows");
    }
    for (std::size_t c = 0; c < cols; ++c) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = {re[r][c], im[r][c]};
    }
  }

  Dims dims;
  if (j.contains("dims")) {
    const auto& d = j["dims"];
    if (!d.is_array()) throw FormatError("\"dims\" must be an array");
    for (const auto& x : d) {
      if (!x.is_number_unsigned()) throw FormatError("\"dims\" entries must be positive integers");
      dims.push_back(x.get<std::size_t>());
    }
  } else {
    dims = {cols};
  }
  return DensityMatrix(std::move(m), std::move(dims));
}

DensityMatrix load_density_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return density_matrix_from_json(buf.str());
}

std::string density_matrix_to_json(const DensityMatrix& rho) {
  json re = json::array(), im = json::array();
  const ComplexMatrix& m = rho.matrix();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json rr = json::array(), ir = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      rr.push_back(m(r, c).real());
      ir.push_back(m(r, c).imag());
    }
    re.push_back(std::move(rr));
    im.push_back(std::move(ir));
  }
  json j;
  j["dims"] = rho.dims();
  j["re"] = std::move(re);
  j["im"] = std::move(im);
  return j.dump();
}

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 15);
  return std::string(buf, res.ptr);
}

TableFormat table_format_from_string(std::string_view name) {
  if (name == "csv") return TableFormat::Csv;
  if (name == "json") return TableFormat::Json;
  throw DomainError("unknown format '" + std::string(name) + "'");
}

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) throw DomainError("table row width mismatch");
  rows.push_back(std::move(row));
}

void write_table(std::ostream& out, const Table& table, TableFormat format) {
  if (format == TableFormat::Csv) {
    out << "# schema: ptm-" << table.kind << "/1\n";
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      out << (c ? "," : "") << table.columns[c];
    }
    out << '\n';
    for (const auto& row : table.rows) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (c) out << ',';
        std::visit(
            [&](const auto& v) {
              using V = std::decay_t<decltype(v)>;
              if constexpr (std::is_same_v<V, double>) out << format_number(v);
              else if constexpr (std::is_same_v<V, std::string>) out << csv_escape(v);
              else out << v;
            },
            row[c]);
      }
      out << '\n';
    }
    return;
  }

  // Numbers are spliced in as text so the 15-digit formatting is preserved.
  out << '[';
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    out << (r ? ",\n " : "\n ") << '{';
    const auto& row = table.rows[r];
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << ", ";
      out << json(table.columns[c]).dump() << ": ";
      std::visit(
          [&](const auto& v) {
            using V = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<V, double>) {
              out << (std::isfinite(v) ? format_number(v) : "null");
            } else if constexpr (std::is_same_v<V, std::string>) {
              out << json(v).dump();
            } else {
              out << v;
            }
          },
          row[c]);
    }
    out << '}';
  }
  out << (table.rows.empty() ? "]\n" : "\n]\n");
}

void write_table(const std::string& path, const Table& table, TableFormat format) {
  if (path.empty() || path == "-") {
    write_table(std::cout, table, format);
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path + "'");
  write_table(out, table, format);
  out.close();
  if (!out) throw IoError("error writing '" + path + "'");
}

}  // namespace ptm
