// Copyright 2026 The simplexgen Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace simplexgen {

/// Absolute tolerance on the coordinate sum of a simplex point.
inline constexpr double kSumTolerance = 1e-12;

/// Compensated (Neumaier) sum.
double stable_sum(std::span<const double> values) noexcept;

/// True when `coords` has at least two entries, each in [0, 1], summing to 1
/// within kSumTolerance.
bool is_simplex_point(std::span<const double> coords) noexcept;

/// Throws DomainError describing the first violated condition.
void check_simplex_point(std::span<const double> coords);

/// A point of the (n-1)-simplex: n >= 2 coordinates in [0, 1] summing to 1.
class SimplexPoint {
 public:
  /// Throws DomainError if `coords` is not a valid simplex point.
  explicit SimplexPoint(std::vector<double> coords);

  std::size_t dim() const noexcept { return coords_.size(); }
  std::span<const double> coords() const noexcept { return coords_; }
  double operator[](std::size_t i) const { return coords_[i]; }

  friend bool operator==(const SimplexPoint&, const SimplexPoint&) = default;

 private:
  std::vector<double> coords_;
};

/// Row-major storage for many points of the same dimension.
class SimplexBatch {
 public:
  SimplexBatch(std::size_t dim, std::size_t count);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return count_; }

  std::span<const double> row(std::size_t i) const noexcept {
    return {data_.data() + i * dim_, dim_};
  }
  std::span<double> row(std::size_t i) noexcept {
    return {data_.data() + i * dim_, dim_};
  }

  /// Column `k` copied out, one value per point.
  std::vector<double> column(std::size_t k) const;

  std::span<const double> data() const noexcept { return data_; }

  SimplexPoint point(std::size_t i) const;

  friend bool operator==(const SimplexBatch&, const SimplexBatch&) = default;

 private:
  std::size_t dim_;
  std::size_t count_;
  std::vector<double> data_;
};

}  // namespace simplexgen
