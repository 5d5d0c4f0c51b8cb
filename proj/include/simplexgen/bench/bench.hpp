// Copyright 2026 The simplexgen Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "simplexgen/marginal.hpp"
#include "simplexgen/samplers.hpp"

namespace simplexgen::bench {

/// Exact work totals for generating `batch` points.
struct DrawAudit {
  std::size_t batch = 0;
  std::uint64_t total_draws = 0;
  std::uint64_t total_powers = 0;

  double draws_per_sample() const noexcept {
    return static_cast<double>(total_draws) / static_cast<double>(batch);
  }
  double powers_per_sample() const noexcept {
    return static_cast<double>(total_powers) / static_cast<double>(batch);
  }
};

/// Counts uniform draws (via the source counter) and fractional-power
/// evaluations for `batch` points. Throws DomainError on n < 2 or batch == 0.
DrawAudit audit_draws(SamplerMethod method, int n, std::size_t batch,
                      MarginalModel model = MarginalModel::Corrected,
                      std::uint64_t seed = 1);

struct BenchOptions {
  std::size_t batch = 0;      ///< 0 = calibrate so one repetition lasts target_ms
  unsigned repetitions = 5;   ///< clamped to at least 5
  double target_ms = 20.0;
  std::uint64_t seed = 42;
  unsigned jobs = 1;          ///< > 1 times generate_batch across threads
  MarginalModel model = MarginalModel::Corrected;
};

struct BenchReport {
  SamplerMethod method = SamplerMethod::StickBreaking;
  int n = 0;
  std::size_t batch = 0;
  unsigned repetitions = 0;
  double wall_ms = 0.0;  ///< median over repetitions
  double samples_per_s = 0.0;
  DrawAudit audit;       ///< totals of one repetition

  double ns_per_sample() const noexcept {
    return wall_ms * 1e6 / static_cast<double>(batch);
  }
};

/// Median-of-repetitions wall time of generating `batch` points with a
/// monotonic clock, after one discarded warm-up batch. Every repetition
/// reuses options.seed, so sample content and counts are identical.
BenchReport measure_throughput(SamplerMethod method, int n,
                               const BenchOptions& options);

/// method,n,batch,wall_ms,samples_per_s,draws_per_sample,powers_per_sample
std::string csv_header();
std::string to_csv_row(const BenchReport& report);

}  // namespace simplexgen::bench
