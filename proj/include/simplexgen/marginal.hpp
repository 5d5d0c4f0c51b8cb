// Copyright 2026 The simplexgen Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <span>
#include <string_view>

namespace simplexgen {

/// Exponent family of the sequential marginals.
///
/// At step j of n the remaining mass r is split off as x in [0, r] with
///
///   pdf(x) = k / r * ((r - x) / r)^(k - 1)
///   cdf(x) = 1 - ((r - x) / r)^k
///   inv(u) = r * (1 - (1 - u)^(1 / k))
///
/// Corrected uses k = n - j, which is the exact conditional law of x_j on the
/// uniform simplex. PaperLiteral uses k = n - 1 at every step; it agrees with
/// Corrected at j = 1 and is wrong for j > 1 when n > 2.
enum class MarginalModel { Corrected, PaperLiteral };

std::string_view to_string(MarginalModel model) noexcept;

/// k in the formulas above.
int cdf_exponent(MarginalModel model, int n, int j) noexcept;

/// k - 1.
inline int density_exponent(MarginalModel model, int n, int j) noexcept {
  return cdf_exponent(model, n, j) - 1;
}

/// Whether the step-j inverse needs a fractional power (k != 1).
inline bool needs_fractional_power(MarginalModel model, int n, int j) noexcept {
  return cdf_exponent(model, n, j) != 1;
}

/// Bookkeeping of the stick-breaking recursion: step j of n and the mass r_j
/// still to be distributed. Starts at j = 1, r_1 = 1.
class StepState {
 public:
  /// Throws DomainError if n < 2.
  explicit StepState(int n);

  int n() const noexcept { return n_; }
  int step() const noexcept { return j_; }
  double remaining() const noexcept { return r_; }

  /// True once all n - 1 sampled coordinates have been consumed.
  bool done() const noexcept { return j_ >= n_; }

  /// r_{j+1} = r_j - x_j; j += 1.
  void advance(double x) noexcept {
    r_ -= x;
    ++j_;
  }

 private:
  int n_;
  int j_ = 1;
  double r_ = 1.0;
};

// The checked functions below throw DomainError naming the violated
// precondition: n >= 2, 1 <= j <= n - 1, 0 < r <= 1, 0 <= x <= r,
// 0 <= u < 1.

double marginal_pdf(MarginalModel model, int n, int j, double r, double x);
double marginal_cdf(MarginalModel model, int n, int j, double r, double x);
double inverse_cdf(MarginalModel model, int n, int j, double r, double u);

/// Product over j = 1..n-1 of marginal_pdf at the point's own r_j, x_j.
///
/// Under Corrected this is (n - 1)! at every interior point: the constant
/// density of the uniform law in the (x_1, ..., x_{n-1}) chart. Returns 0 on
/// boundary points where some factor vanishes. Throws DomainError for an
/// invalid point.
double chain_density(MarginalModel model, std::span<const double> point);

/// Natural log of chain_density, finite for n well beyond factorial overflow.
double chain_log_density(MarginalModel model, std::span<const double> point);

namespace detail {

// Unchecked kernels shared by the samplers and the checked wrappers; k is the
// cdf exponent.

inline double inverse_cdf_kernel(int k, double r, double u) noexcept {
  if (k == 1) return r * u;
  return -r * std::expm1(std::log1p(-u) / k);
}

double cdf_kernel(int k, double r, double x) noexcept;

}  // namespace detail

}  // namespace simplexgen
