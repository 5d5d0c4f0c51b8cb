// Copyright 2026 The simplexgen Authors
// SPDX-License-Identifier: Apache-2.0

#include "simplexgen/marginal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "simplexgen/errors.hpp"
#include "simplexgen/simplex_point.hpp"

namespace simplexgen {
namespace {

void check_step(int n, int j, double r) {
  if (n < 2) throw DomainError("n must be >= 2, got " + std::to_string(n));
  if (j < 1 || j > n - 1) {
    throw DomainError("step j must satisfy 1 <= j <= n-1, got j=" +
                      std::to_string(j) + " n=" + std::to_string(n));
  }
  if (!(r > 0.0 && r <= 1.0)) {
    throw DomainError("remaining mass r must satisfy 0 < r <= 1");
  }
}

void check_x(double r, double x) {
  if (!(x >= 0.0 && x <= r)) {
    throw DomainError("x must satisfy 0 <= x <= r");
  }
}

double pdf_kernel(int k, double r, double x) noexcept {
  if (k == 1) return 1.0 / r;
  return k / r * std::pow((r - x) / r, k - 1);
}

double log_pdf_kernel(int k, double r, double x) noexcept {
  if (k == 1) return -std::log(r);
  if (x >= r) return -std::numeric_limits<double>::infinity();
  return std::log(static_cast<double>(k)) - std::log(r) +
         (k - 1) * std::log1p(-x / r);
}

}  // namespace

namespace detail {

double cdf_kernel(int k, double r, double x) noexcept {
  if (x <= 0.0) return 0.0;
  if (x >= r) return 1.0;
  if (k == 1) return x / r;
  return -std::expm1(k * std::log1p(-x / r));
}

}  // namespace detail

std::string_view to_string(MarginalModel model) noexcept {
  switch (model) {
    case MarginalModel::Corrected:
      return "corrected";
    case MarginalModel::PaperLiteral:
      return "paper-literal";
  }
  return "unknown";
}

int cdf_exponent(MarginalModel model, int n, int j) noexcept {
  return model == MarginalModel::Corrected ? n - j : n - 1;
}

StepState::StepState(int n) : n_(n) {
  if (n < 2) throw DomainError("n must be >= 2, got " + std::to_string(n));
}

double marginal_pdf(MarginalModel model, int n, int j, double r, double x) {
  check_step(n, j, r);
  check_x(r, x);
  return pdf_kernel(cdf_exponent(model, n, j), r, x);
}

double marginal_cdf(MarginalModel model, int n, int j, double r, double x) {
  check_step(n, j, r);
  check_x(r, x);
  return detail::cdf_kernel(cdf_exponent(model, n, j), r, x);
}

double inverse_cdf(MarginalModel model, int n, int j, double r, double u) {
  check_step(n, j, r);
  if (!(u >= 0.0 && u < 1.0)) throw DomainError("u must satisfy 0 <= u < 1");
  return detail::inverse_cdf_kernel(cdf_exponent(model, n, j), r, u);
}

namespace {

// Walks the chart of `point`, calling f(k, r_j, x_j) for j = 1..n-1.
// Reconstructed r_j is clamped at 0 and x_j at r_j so that the rounding
// drift allowed by the sum tolerance never leaves the support. Stops early
// (returning false) when r_j reaches 0.
template <typename F>
bool walk_chart(MarginalModel model, std::span<const double> point, F&& f) {
  check_simplex_point(point);
  const int n = static_cast<int>(point.size());
  for (StepState s(n); !s.done();) {
    const double r = std::max(s.remaining(), 0.0);
    if (r <= 0.0) return false;
    const double x = std::min(point[s.step() - 1], r);
    f(cdf_exponent(model, n, s.step()), r, x);
    s.advance(point[s.step() - 1]);
  }
  return true;
}

}  // namespace

double chain_density(MarginalModel model, std::span<const double> point) {
  double density = 1.0;
  const bool interior = walk_chart(model, point, [&](int k, double r, double x) {
    density *= pdf_kernel(k, r, x);
  });
  return interior ? density : 0.0;
}

double chain_log_density(MarginalModel model, std::span<const double> point) {
  double log_density = 0.0;
  const bool interior = walk_chart(model, point, [&](int k, double r, double x) {
    log_density += log_pdf_kernel(k, r, x);
  });
  return interior ? log_density : -std::numeric_limits<double>::infinity();
}

}  // namespace simplexgen
