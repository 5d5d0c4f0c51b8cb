// Copyright 2026 The simplexgen Authors
// SPDX-License-Identifier: Apache-2.0

#include "simplexgen/stats/goodness_of_fit.hpp"

#include <algorithm>
#include <boost/math/distributions/chi_squared.hpp>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <utility>

#include "simplexgen/errors.hpp"

namespace simplexgen::stats {
namespace {

void check_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw UsageError("alpha must lie in (0, 1)");
  }
}

void check_ks_size(const EmpiricalSample& s) {
  if (s.size() < kMinKsSampleSize) {
    throw UsageError("KS test needs N >= 50, got " + std::to_string(s.size()));
  }
}

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

EmpiricalSample::EmpiricalSample(std::vector<double> values)
    : values_(std::move(values)) {}

EmpiricalSample EmpiricalSample::from_unsorted(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  return from_sorted(std::move(values));
}

EmpiricalSample EmpiricalSample::from_sorted(std::vector<double> values) {
  if (values.empty()) throw UsageError("empirical sample is empty");
  for (double v : values) {
    if (!std::isfinite(v)) throw UsageError("empirical sample has a non-finite value");
  }
  if (!std::is_sorted(values.begin(), values.end())) {
    throw UsageError("empirical sample is not sorted");
  }
  return EmpiricalSample(std::move(values));
}

std::string TestReport::summary() const {
  std::string line = name + "  stat=" + format_number(statistic) +
                     "  crit=" + format_number(critical_value) +
                     "  alpha=" + format_number(alpha) +
                     "  N=" + std::to_string(size_a);
  if (size_b != 0) line += "," + std::to_string(size_b);
  line += pass ? "  PASS" : "  FAIL";
  return line;
}

double kolmogorov_tail(double lambda) {
  if (lambda <= 0.0) return 1.0;
  if (lambda < 1.0) {
    // Jacobi theta form; the alternating series converges slowly here.
    const double pi2 = std::numbers::pi * std::numbers::pi;
    double sum = 0.0;
    for (int k = 1; k <= 50; ++k) {
      const double m = 2.0 * k - 1.0;
      const double term = std::exp(-m * m * pi2 / (8.0 * lambda * lambda));
      sum += term;
      if (term < 1e-18) break;
    }
    return 1.0 - std::sqrt(2.0 * std::numbers::pi) / lambda * sum;
  }
  double sum = 0.0;
  for (int k = 1; k <= 100; ++k) {
    const double term = std::exp(-2.0 * k * k * lambda * lambda);
    sum += (k % 2 == 1) ? term : -term;
    if (term < 1e-18) break;
  }
  return 2.0 * sum;
}

double kolmogorov_critical_coefficient(double alpha) {
  check_alpha(alpha);
  double lo = 0.0;
  double hi = 10.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (kolmogorov_tail(mid) > alpha) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double chi_square_critical_value(std::size_t dof, double alpha) {
  check_alpha(alpha);
  if (dof == 0) throw UsageError("chi-square needs at least one degree of freedom");
  const boost::math::chi_squared dist(static_cast<double>(dof));
  return boost::math::quantile(boost::math::complement(dist, alpha));
}

TestReport ks_one_sample(const EmpiricalSample& sample, const Cdf& cdf,
                         double alpha) {
  check_ks_size(sample);
  check_alpha(alpha);
  const auto n = static_cast<double>(sample.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const double f = cdf(sample[i]);
    const double upper = static_cast<double>(i + 1) / n - f;
    const double lower = f - static_cast<double>(i) / n;
    d = std::max({d, std::fabs(upper), std::fabs(lower)});
  }
  TestReport report;
  report.name = "ks_one_sample";
  report.statistic = d;
  report.critical_value = kolmogorov_critical_coefficient(alpha) / std::sqrt(n);
  report.alpha = alpha;
  report.size_a = sample.size();
  report.pass = report.statistic < report.critical_value;
  return report;
}

TestReport ks_two_sample(const EmpiricalSample& a, const EmpiricalSample& b,
                         double alpha) {
  check_ks_size(a);
  check_ks_size(b);
  check_alpha(alpha);
  const auto na = static_cast<double>(a.size());
  const auto nb = static_cast<double>(b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    const double v = std::min(a[i], b[j]);
    while (i < a.size() && a[i] == v) ++i;
    while (j < b.size() && b[j] == v) ++j;
    d = std::max(d, std::fabs(static_cast<double>(i) / na -
                              static_cast<double>(j) / nb));
  }
  TestReport report;
  report.name = "ks_two_sample";
  report.statistic = d;
  report.critical_value =
      kolmogorov_critical_coefficient(alpha) * std::sqrt((na + nb) / (na * nb));
  report.alpha = alpha;
  report.size_a = a.size();
  report.size_b = b.size();
  report.pass = report.statistic < report.critical_value;
  return report;
}

TestReport chi_square_counts(std::span<const std::uint64_t> counts,
                             double alpha) {
  check_alpha(alpha);
  if (counts.size() < 2) throw UsageError("chi-square needs at least 2 bins");
  std::uint64_t total = 0;
  for (auto c : counts) total += c;
  const double expected =
      static_cast<double>(total) / static_cast<double>(counts.size());
  if (expected < 5.0) {
    throw UsageError("chi-square expected count per bin is below 5");
  }
  double stat = 0.0;
  for (auto c : counts) {
    const double diff = static_cast<double>(c) - expected;
    stat += diff * diff / expected;
  }
  TestReport report;
  report.name = "chi_square";
  report.statistic = stat;
  report.critical_value = chi_square_critical_value(counts.size() - 1, alpha);
  report.alpha = alpha;
  report.size_a = static_cast<std::size_t>(total);
  report.pass = report.statistic < report.critical_value;
  return report;
}

TestReport chi_square_marginal(const EmpiricalSample& sample, const Cdf& cdf,
                               std::size_t bins, double alpha) {
  if (bins < 10) throw UsageError("chi-square marginal needs at least 10 bins");
  if (sample.size() < 20 * bins) {
    throw UsageError("chi-square marginal needs N / bins >= 20");
  }
  std::vector<std::uint64_t> counts(bins, 0);
  for (double v : sample.values()) {
    const double f = std::clamp(cdf(v), 0.0, 1.0);
    auto b = static_cast<std::size_t>(f * static_cast<double>(bins));
    ++counts[std::min(b, bins - 1)];
  }
  return chi_square_counts(counts, alpha);
}

}  // namespace simplexgen::stats
