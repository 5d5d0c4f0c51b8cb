// Copyright 2026 The simplexgen Authors
// SPDX-License-Identifier: Apache-2.0

#include "simplexgen/samplers.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "simplexgen/errors.hpp"

namespace simplexgen {
namespace {

void check_dim(std::size_t n) {
  if (n < 2) throw DomainError("n must be >= 2, got " + std::to_string(n));
}

void check_dim(int n) {
  if (n < 2) throw DomainError("n must be >= 2, got " + std::to_string(n));
}

template <typename Fill>
SimplexPoint make_point(int n, Fill&& fill) {
  check_dim(n);
  std::vector<double> coords(static_cast<std::size_t>(n));
  fill(std::span<double>(coords));
  return SimplexPoint(std::move(coords));
}

}  // namespace

std::string_view to_string(SamplerMethod method) noexcept {
  switch (method) {
    case SamplerMethod::StickBreaking:
      return "stick";
    case SamplerMethod::RejectionCube:
      return "rejection";
    case SamplerMethod::SortedSpacings:
      return "spacings";
    case SamplerMethod::ExponentialNormalize:
      return "exponential";
    case SamplerMethod::RescaledUniforms:
      return "rescaled";
  }
  return "unknown";
}

std::optional<SamplerMethod> parse_sampler_method(std::string_view name) {
  for (auto m : {SamplerMethod::StickBreaking, SamplerMethod::RejectionCube,
                 SamplerMethod::SortedSpacings,
                 SamplerMethod::ExponentialNormalize,
                 SamplerMethod::RescaledUniforms}) {
    if (to_string(m) == name) return m;
  }
  return std::nullopt;
}

std::uint64_t default_rejection_budget(int n) noexcept {
  constexpr std::uint64_t kCap = 10'000'000;
  std::uint64_t budget = 1000;
  for (int k = 2; k <= n - 1; ++k) {
    budget *= static_cast<std::uint64_t>(k);
    if (budget >= kCap) return kCap;
  }
  return budget;
}

namespace detail {

void settle_residual(std::span<double> coords) {
  double& last = coords.back();
  if (last >= 0.0) return;
  if (last < -kSumTolerance) {
    throw std::logic_error("simplex residual below -1e-12: " +
                           std::to_string(last));
  }
  const double deficit = last;
  last = 0.0;
  *std::max_element(coords.begin(), coords.end()) += deficit;
}

}  // namespace detail

void sample_stick_breaking(std::span<double> out, MarginalModel model,
                           UniformSource& source, SampleCounters* counters) {
  check_dim(out.size());
  const int n = static_cast<int>(out.size());
  StepState state(n);
  for (; !state.done(); ) {
    const int j = state.step();
    const int k = cdf_exponent(model, n, j);
    if (counters != nullptr && k != 1) ++counters->power_evals;
    const double x =
        detail::inverse_cdf_kernel(k, state.remaining(), source.next());
    out[j - 1] = x;
    state.advance(x);
  }
  out[n - 1] = state.remaining();
  detail::settle_residual(out);
}

void sample_rejection(std::span<double> out, UniformSource& source,
                      std::uint64_t max_trials, SampleCounters* counters) {
  check_dim(out.size());
  const std::size_t m = out.size() - 1;
  for (std::uint64_t trial = 0; trial < max_trials; ++trial) {
    if (counters != nullptr) ++counters->trials;
    double sum = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      out[i] = source.next();
      sum += out[i];
    }
    if (sum <= 1.0) {
      out[m] = 1.0 - sum;
      return;
    }
  }
  throw BudgetExceeded(max_trials);
}

void sample_sorted_spacings(std::span<double> out, UniformSource& source) {
  check_dim(out.size());
  const std::size_t m = out.size() - 1;
  for (std::size_t i = 0; i < m; ++i) out[i] = source.next();
  std::sort(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(m));
  out[m] = 1.0 - out[m - 1];
  for (std::size_t i = m - 1; i > 0; --i) out[i] -= out[i - 1];
}

void sample_exponential(std::span<double> out, UniformSource& source) {
  check_dim(out.size());
  double sum = 0.0;
  for (double& v : out) {
    v = -std::log1p(-source.next());
    sum += v;
  }
  if (sum == 0.0) {
    // Every draw was exactly 0; the limit of equal weights.
    std::fill(out.begin(), out.end(), 1.0 / static_cast<double>(out.size()));
    return;
  }
  for (double& v : out) v /= sum;
}

void sample_rescaled_uniforms(std::span<double> out, UniformSource& source) {
  check_dim(out.size());
  double sum = 0.0;
  while (sum == 0.0) {
    for (double& v : out) {
      v = source.next();
      sum += v;
    }
  }
  for (double& v : out) v /= sum;
}

void sample(SamplerMethod method, std::span<double> out, MarginalModel model,
            UniformSource& source, SampleCounters* counters) {
  switch (method) {
    case SamplerMethod::StickBreaking:
      return sample_stick_breaking(out, model, source, counters);
    case SamplerMethod::RejectionCube:
      return sample_rejection(
          out, source, default_rejection_budget(static_cast<int>(out.size())),
          counters);
    case SamplerMethod::SortedSpacings:
      return sample_sorted_spacings(out, source);
    case SamplerMethod::ExponentialNormalize:
      return sample_exponential(out, source);
    case SamplerMethod::RescaledUniforms:
      return sample_rescaled_uniforms(out, source);
  }
}

SimplexPoint sample_stick_breaking(int n, MarginalModel model,
                                   UniformSource& source,
                                   SampleCounters* counters) {
  return make_point(n, [&](std::span<double> out) {
    sample_stick_breaking(out, model, source, counters);
  });
}

SimplexPoint sample_rejection(int n, UniformSource& source,
                              std::uint64_t max_trials,
                              SampleCounters* counters) {
  return make_point(n, [&](std::span<double> out) {
    sample_rejection(out, source, max_trials, counters);
  });
}

SimplexPoint sample_rejection(int n, UniformSource& source) {
  return sample_rejection(n, source, default_rejection_budget(n));
}

SimplexPoint sample_sorted_spacings(int n, UniformSource& source) {
  return make_point(
      n, [&](std::span<double> out) { sample_sorted_spacings(out, source); });
}

SimplexPoint sample_exponential(int n, UniformSource& source) {
  return make_point(
      n, [&](std::span<double> out) { sample_exponential(out, source); });
}

SimplexPoint sample_rescaled_uniforms(int n, UniformSource& source) {
  return make_point(
      n, [&](std::span<double> out) { sample_rescaled_uniforms(out, source); });
}

SimplexPoint sample(SamplerMethod method, int n, MarginalModel model,
                    UniformSource& source, SampleCounters* counters) {
  return make_point(n, [&](std::span<double> out) {
    sample(method, out, model, source, counters);
  });
}

}  // namespace simplexgen
