// Copyright 2026 The simplexgen Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "simplexgen/simplex_point.hpp"

namespace simplexgen::cli {

enum class PointFormat { Csv, Jsonl };

inline constexpr int kMinPrecision = 6;
inline constexpr int kMaxPrecision = 17;

/// `precision` significant digits, '.' separator regardless of locale.
std::string format_double(double value, int precision);

/// CSV: optional header "x1,...,xn", then one comma-separated row per point.
/// JSONL: one array of n numbers per line. LF line endings in both.
void write_points(std::ostream& os, const SimplexBatch& points,
                  PointFormat format, int precision, bool header);

/// Reads either format back (a leading "x1,..." header line is skipped).
/// Throws UsageError on malformed rows and DomainError on rows that are not
/// simplex points.
std::vector<SimplexPoint> read_points(std::istream& is, PointFormat format);

}  // namespace simplexgen::cli
