// Copyright 2026 The simplexgen Authors
// SPDX-License-Identifier: Apache-2.0

#include "simplexgen/simplex_point.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "simplexgen/errors.hpp"

namespace simplexgen {

double stable_sum(std::span<const double> values) noexcept {
  double sum = 0.0;
  double comp = 0.0;
  for (double v : values) {
    const double t = sum + v;
    if (std::fabs(sum) >= std::fabs(v)) {
      comp += (sum - t) + v;
    } else {
      comp += (v - t) + sum;
    }
    sum = t;
  }
  return sum + comp;
}

bool is_simplex_point(std::span<const double> coords) noexcept {
  if (coords.size() < 2) return false;
  for (double v : coords) {
    if (!(v >= 0.0 && v <= 1.0)) return false;
  }
  return std::fabs(stable_sum(coords) - 1.0) <= kSumTolerance;
}

void check_simplex_point(std::span<const double> coords) {
  if (coords.size() < 2) {
    throw DomainError("simplex point needs n >= 2 coordinates, got " +
                      std::to_string(coords.size()));
  }
  for (std::size_t i = 0; i < coords.size(); ++i) {
    const double v = coords[i];
    if (!(v >= 0.0 && v <= 1.0)) {
      throw DomainError("coordinate x" + std::to_string(i + 1) +
                        " is outside [0, 1]");
    }
  }
  const double deviation = std::fabs(stable_sum(coords) - 1.0);
  if (!(deviation <= kSumTolerance)) {
    throw DomainError("coordinates sum differs from 1 by more than 1e-12");
  }
}

SimplexPoint::SimplexPoint(std::vector<double> coords)
    : coords_(std::move(coords)) {
  check_simplex_point(coords_);
}

SimplexBatch::SimplexBatch(std::size_t dim, std::size_t count)
    : dim_(dim), count_(count), data_(dim * count, 0.0) {
  if (dim < 2) throw DomainError("batch dimension must be >= 2");
}

std::vector<double> SimplexBatch::column(std::size_t k) const {
  std::vector<double> out(count_);
  for (std::size_t i = 0; i < count_; ++i) out[i] = data_[i * dim_ + k];
  return out;
}

SimplexPoint SimplexBatch::point(std::size_t i) const {
  const auto r = row(i);
  return SimplexPoint(std::vector<double>(r.begin(), r.end()));
}

}  // namespace simplexgen
