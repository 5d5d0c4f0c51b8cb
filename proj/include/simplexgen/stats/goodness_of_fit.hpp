// Copyright 2026 The simplexgen Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace simplexgen::stats {

/// Sorted, finite sample values.
class EmpiricalSample {
 public:
  /// Sorts `values`. Throws UsageError if empty or any value is not finite.
  static EmpiricalSample from_unsorted(std::vector<double> values);

  /// Throws UsageError if `values` is empty, unsorted or not finite.
  static EmpiricalSample from_sorted(std::vector<double> values);

  std::size_t size() const noexcept { return values_.size(); }
  std::span<const double> values() const noexcept { return values_; }
  double operator[](std::size_t i) const { return values_[i]; }

 private:
  explicit EmpiricalSample(std::vector<double> values);
  std::vector<double> values_;
};

struct TestReport {
  std::string name;
  double statistic = 0.0;
  double critical_value = 0.0;
  double alpha = 0.01;
  std::size_t size_a = 0;
  std::size_t size_b = 0;  ///< second sample size; 0 for one-sample tests
  bool pass = false;       ///< statistic < critical_value

  /// Single line: name, statistic, critical value, alpha, sizes, verdict.
  std::string summary() const;
};

using Cdf = std::function<double(double)>;

/// Kolmogorov limiting tail Q(lambda) = 2 sum_{k>=1} (-1)^(k-1) exp(-2 k^2 lambda^2).
double kolmogorov_tail(double lambda);

/// lambda with kolmogorov_tail(lambda) = alpha, by bisection.
/// 1.3581 at alpha = 0.05 and 1.6276 at alpha = 0.01.
double kolmogorov_critical_coefficient(double alpha);

/// Upper-alpha quantile of the chi-square law with `dof` degrees of freedom.
double chi_square_critical_value(std::size_t dof, double alpha);

/// Minimum sample size the asymptotic KS critical values are used for.
inline constexpr std::size_t kMinKsSampleSize = 50;

/// D = max_i max(|i/N - F(v_i)|, |(i-1)/N - F(v_i)|), critical value
/// c(alpha) / sqrt(N). Throws UsageError when N < 50 or alpha is not in (0, 1).
TestReport ks_one_sample(const EmpiricalSample& sample, const Cdf& cdf,
                         double alpha);

/// D = sup |F_a - F_b|, critical value c(alpha) sqrt((N_a + N_b) / (N_a N_b)).
TestReport ks_two_sample(const EmpiricalSample& a, const EmpiricalSample& b,
                         double alpha);

/// Pearson statistic of `counts` against equal expected counts, with
/// counts.size() - 1 degrees of freedom. Throws UsageError when the expected
/// count per bin is below 5 or there are fewer than 2 bins.
TestReport chi_square_counts(std::span<const std::uint64_t> counts,
                             double alpha);

/// Chi-square test of `sample` in `bins` bins equiprobable under `cdf`.
/// A value falls in bin floor(bins * F(v)), which is the same partition as
/// edges at the bin quantiles for continuous F. Requires bins >= 10 and
/// N / bins >= 20 (UsageError otherwise).
TestReport chi_square_marginal(const EmpiricalSample& sample, const Cdf& cdf,
                               std::size_t bins, double alpha);

}  // namespace simplexgen::stats
