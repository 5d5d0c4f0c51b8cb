// Copyright 2026 The simplexgen Authors
// SPDX-License-Identifier: Apache-2.0

#include "simplexgen/cli/point_io.hpp"

#include <charconv>
#include <istream>
#include <json.hpp>
#include <ostream>
#include <string_view>

#include "simplexgen/errors.hpp"

namespace simplexgen::cli {
namespace {

std::vector<double> parse_csv_row(std::string_view line, std::size_t line_no) {
  std::vector<double> row;
  const char* p = line.data();
  const char* end = line.data() + line.size();
  for (;;) {
    double v = 0.0;
    const auto res = std::from_chars(p, end, v);
    if (res.ec != std::errc{}) {
      throw UsageError("malformed number on line " + std::to_string(line_no));
    }
    row.push_back(v);
    p = res.ptr;
    if (p == end) break;
    if (*p != ',') {
      throw UsageError("unexpected character on line " + std::to_string(line_no));
    }
    ++p;
  }
  return row;
}

}  // namespace

std::string format_double(double value, int precision) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value,
                                 std::chars_format::general, precision);
  return std::string(buf, res.ptr);
}

void write_points(std::ostream& os, const SimplexBatch& points,
                  PointFormat format, int precision, bool header) {
  const std::size_t n = points.dim();
  std::string line;
  if (format == PointFormat::Csv && header) {
    for (std::size_t k = 0; k < n; ++k) {
      line += (k == 0 ? "x" : ",x") + std::to_string(k + 1);
    }
    line += '\n';
    os << line;
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto row = points.row(i);
    line.clear();
    if (format == PointFormat::Jsonl) line += '[';
    for (std::size_t k = 0; k < n; ++k) {
      if (k != 0) line += ',';
      line += format_double(row[k], precision);
    }
    if (format == PointFormat::Jsonl) line += ']';
    line += '\n';
    os << line;
  }
}

std::vector<SimplexPoint> read_points(std::istream& is, PointFormat format) {
  std::vector<SimplexPoint> points;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (format == PointFormat::Csv) {
      if (line_no == 1 && line.front() == 'x') continue;
      points.emplace_back(parse_csv_row(line, line_no));
    } else {
      std::vector<double> row;
      try {
        row = nlohmann::json::parse(line).get<std::vector<double>>();
      } catch (const nlohmann::json::exception&) {
        throw UsageError("malformed JSON array on line " + std::to_string(line_no));
      }
      points.emplace_back(std::move(row));
    }
  }
  return points;
}

}  // namespace simplexgen::cli
