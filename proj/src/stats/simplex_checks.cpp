// Copyright 2026 The simplexgen Authors
// SPDX-License-Identifier: Apache-2.0

#include "simplexgen/stats/simplex_checks.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "simplexgen/errors.hpp"

namespace simplexgen::stats {
namespace {

void pit_point(std::span<const double> coords, MarginalModel model,
               std::vector<double>& out) {
  check_simplex_point(coords);
  const int n = static_cast<int>(coords.size());
  for (StepState s(n); !s.done();) {
    const double x_raw = coords[s.step() - 1];
    const double r = std::max(s.remaining(), 0.0);
    if (r <= 0.0) {
      out.push_back(0.0);
    } else {
      out.push_back(detail::cdf_kernel(cdf_exponent(model, n, s.step()), r,
                                       std::min(x_raw, r)));
    }
    s.advance(x_raw);
  }
}

MomentEstimate estimate(double value, double target, double variance_of_value,
                        std::size_t samples) {
  MomentEstimate e;
  e.value = value;
  e.target = target;
  e.std_error =
      std::sqrt(std::max(variance_of_value, 0.0) / static_cast<double>(samples));
  e.pass = std::fabs(value - target) < kMomentStdErrors * e.std_error;
  return e;
}

}  // namespace

std::vector<double> pit_transform(const SimplexBatch& points,
                                  MarginalModel model) {
  std::vector<double> out;
  out.reserve((points.dim() - 1) * points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    pit_point(points.row(i), model, out);
  }
  return out;
}

std::vector<double> pit_transform(std::span<const SimplexPoint> points,
                                  MarginalModel model) {
  std::vector<double> out;
  for (const auto& p : points) pit_point(p.coords(), model, out);
  return out;
}

bool MomentReport::pass() const noexcept {
  auto ok = [](const MomentEstimate& e) { return e.pass; };
  return std::all_of(means.begin(), means.end(), ok) &&
         std::all_of(variances.begin(), variances.end(), ok) && covariance.pass;
}

double target_mean(std::size_t n) noexcept { return 1.0 / static_cast<double>(n); }

double target_variance(std::size_t n) noexcept {
  const auto d = static_cast<double>(n);
  return (d - 1.0) / (d * d * (d + 1.0));
}

double target_covariance(std::size_t n) noexcept {
  const auto d = static_cast<double>(n);
  return -1.0 / (d * d * (d + 1.0));
}

MomentReport moment_check(const SimplexBatch& points) {
  if (points.size() < kMinMomentSamples) {
    throw UsageError("moment check needs at least 10,000 points, got " +
                     std::to_string(points.size()));
  }
  const std::size_t n = points.dim();
  const std::size_t count = points.size();
  const auto N = static_cast<double>(count);

  std::vector<double> mean(n, 0.0);
  for (std::size_t i = 0; i < count; ++i) {
    const auto row = points.row(i);
    for (std::size_t k = 0; k < n; ++k) mean[k] += row[k];
  }
  for (double& m : mean) m /= N;

  // Central moments m2, m4 per coordinate; cross moments for (x_1, x_2).
  std::vector<double> m2(n, 0.0);
  std::vector<double> m4(n, 0.0);
  double c11 = 0.0;
  double c22 = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    const auto row = points.row(i);
    for (std::size_t k = 0; k < n; ++k) {
      const double d = row[k] - mean[k];
      const double d2 = d * d;
      m2[k] += d2;
      m4[k] += d2 * d2;
    }
    const double a = row[0] - mean[0];
    const double b = row[1] - mean[1];
    c11 += a * b;
    c22 += a * a * b * b;
  }

  MomentReport report;
  report.dim = n;
  report.samples = count;
  for (std::size_t k = 0; k < n; ++k) {
    const double var = m2[k] / N;
    const double fourth = m4[k] / N;
    report.means.push_back(estimate(mean[k], target_mean(n), var, count));
    report.variances.push_back(
        estimate(m2[k] / (N - 1.0), target_variance(n), fourth - var * var, count));
  }
  const double cov = c11 / N;
  report.covariance = estimate(c11 / (N - 1.0), target_covariance(n),
                               c22 / N - cov * cov, count);
  return report;
}

}  // namespace simplexgen::stats
