// Copyright 2026 The simplexgen Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "simplexgen/marginal.hpp"
#include "simplexgen/simplex_point.hpp"

namespace simplexgen::stats {

/// Stepwise probability integral transform: for every point, reconstructs
/// r_j and emits cdf_j(x_j; r_j) for j = 1..n-1, point after point.
///
/// For points uniform on the simplex and the Corrected model the output is
/// i.i.d. uniform on [0, 1]. Throws DomainError on an invalid point.
std::vector<double> pit_transform(const SimplexBatch& points,
                                  MarginalModel model);
std::vector<double> pit_transform(std::span<const SimplexPoint> points,
                                  MarginalModel model);

struct MomentEstimate {
  double value = 0.0;
  double target = 0.0;
  double std_error = 0.0;
  bool pass = false;  ///< |value - target| < 5 std_error
};

/// Sample moments of a batch against the uniform-simplex targets
/// E[x_i] = 1/n, Var[x_i] = (n-1) / (n^2 (n+1)), Cov[x_1, x_2] = -1 / (n^2 (n+1)).
struct MomentReport {
  std::size_t dim = 0;
  std::size_t samples = 0;
  std::vector<MomentEstimate> means;
  std::vector<MomentEstimate> variances;
  MomentEstimate covariance;  ///< between x_1 and x_2

  bool pass() const noexcept;
};

inline constexpr std::size_t kMinMomentSamples = 10'000;
inline constexpr double kMomentStdErrors = 5.0;

double target_mean(std::size_t n) noexcept;
double target_variance(std::size_t n) noexcept;
double target_covariance(std::size_t n) noexcept;

/// Throws UsageError for fewer than 10,000 points.
MomentReport moment_check(const SimplexBatch& points);

}  // namespace simplexgen::stats
