// Copyright 2026 The simplexgen Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include "simplexgen/marginal.hpp"
#include "simplexgen/simplex_point.hpp"
#include "simplexgen/uniform_source.hpp"

namespace simplexgen {

enum class SamplerMethod {
  StickBreaking,
  RejectionCube,
  SortedSpacings,
  ExponentialNormalize,
  /// Negative control: n uniforms divided by their sum. Not uniform on the
  /// simplex.
  RescaledUniforms,
};

/// CLI spelling: stick, rejection, spacings, exponential, rescaled.
std::string_view to_string(SamplerMethod method) noexcept;
std::optional<SamplerMethod> parse_sampler_method(std::string_view name);

/// False only for RescaledUniforms.
constexpr bool is_uniform(SamplerMethod method) noexcept {
  return method != SamplerMethod::RescaledUniforms;
}

/// Work counters beyond the uniform draws, which the source itself counts.
struct SampleCounters {
  std::uint64_t power_evals = 0;  ///< inverse-cdf steps needing a fractional power
  std::uint64_t trials = 0;       ///< rejection trials (accepted or not)
};

/// 1000 * (n-1)!, capped at 1e7.
std::uint64_t default_rejection_budget(int n) noexcept;

// Span overloads write n = out.size() coordinates and require n >= 2. They do
// not allocate, which is what the benchmarks time.

/// Sequential inverse-cdf sampling of x_1..x_{n-1}; x_n is the residual.
/// Consumes exactly n - 1 draws.
void sample_stick_breaking(std::span<double> out, MarginalModel model,
                           UniformSource& source,
                           SampleCounters* counters = nullptr);

/// Draws n - 1 uniforms per trial, accepting when their sum is <= 1.
/// Throws BudgetExceeded after `max_trials` rejections.
void sample_rejection(std::span<double> out, UniformSource& source,
                      std::uint64_t max_trials,
                      SampleCounters* counters = nullptr);

/// Gaps between sorted n - 1 uniforms padded with 0 and 1.
void sample_sorted_spacings(std::span<double> out, UniformSource& source);

/// n standard exponentials -log(1 - u) normalized by their sum.
void sample_exponential(std::span<double> out, UniformSource& source);

/// n uniforms normalized by their sum (redrawn in the null event that all
/// are zero).
void sample_rescaled_uniforms(std::span<double> out, UniformSource& source);

/// Dispatch on `method`. `model` only affects StickBreaking; rejection uses
/// default_rejection_budget.
void sample(SamplerMethod method, std::span<double> out, MarginalModel model,
            UniformSource& source, SampleCounters* counters = nullptr);

SimplexPoint sample_stick_breaking(int n, MarginalModel model,
                                   UniformSource& source,
                                   SampleCounters* counters = nullptr);
SimplexPoint sample_rejection(int n, UniformSource& source,
                              std::uint64_t max_trials,
                              SampleCounters* counters = nullptr);
SimplexPoint sample_rejection(int n, UniformSource& source);
SimplexPoint sample_sorted_spacings(int n, UniformSource& source);
SimplexPoint sample_exponential(int n, UniformSource& source);
SimplexPoint sample_rescaled_uniforms(int n, UniformSource& source);
SimplexPoint sample(SamplerMethod method, int n, MarginalModel model,
                    UniformSource& source, SampleCounters* counters = nullptr);

namespace detail {

/// Clamps a last coordinate in [-1e-12, 0) to zero, moving the deficit onto
/// the largest coordinate. A more negative residual is an internal error
/// (std::logic_error).
void settle_residual(std::span<double> coords);

}  // namespace detail

}  // namespace simplexgen
