// Copyright 2026 The simplexgen Authors
// SPDX-License-Identifier: Apache-2.0

#include "simplexgen/bench/bench.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "simplexgen/errors.hpp"

namespace simplexgen::bench {
namespace {

TEST(AuditDrawsTest, StickBreakingCounts) {
  const auto audit = audit_draws(SamplerMethod::StickBreaking, 10, 1000);
  EXPECT_EQ(audit.total_draws, 9000u);
  EXPECT_EQ(audit.total_powers, 8000u);
  EXPECT_EQ(audit.draws_per_sample(), 9.0);
  EXPECT_EQ(audit.powers_per_sample(), 8.0);
}

TEST(AuditDrawsTest, StickBreakingGrid) {
  for (int n : {2, 3, 7, 64, 100, 511, 1024, 4096}) {
    for (std::uint64_t seed : {1u, 99u}) {
      const auto audit = audit_draws(SamplerMethod::StickBreaking, n, 3, MarginalModel::Corrected, seed);
      ASSERT_EQ(audit.total_draws, 3u * static_cast<std::uint64_t>(n - 1));
      ASSERT_EQ(audit.total_powers, 3u * static_cast<std::uint64_t>(n - 2));
    }
  }
}

TEST(AuditDrawsTest, SpacingsAndRejection) {
  const auto spacings = audit_draws(SamplerMethod::SortedSpacings, 10, 1000);
  EXPECT_EQ(spacings.draws_per_sample(), 9.0);
  EXPECT_EQ(spacings.powers_per_sample(), 0.0);

  // Expected (n - 1) (n - 1)! = 18 draws per point; the per-point draw count
  // is 3 times a geometric(1/6) trial count, with sd about 3 * 5.48.
  const auto rejection = audit_draws(SamplerMethod::RejectionCube, 4, 100000);
  EXPECT_NEAR(rejection.draws_per_sample(), 18.0, 5 * 16.5 / std::sqrt(100000.0));
  EXPECT_EQ(rejection.total_draws % 3, 0u);
}

TEST(AuditDrawsTest, Errors) {
  EXPECT_THROW(audit_draws(SamplerMethod::StickBreaking, 1, 10), DomainError);
  EXPECT_THROW(audit_draws(SamplerMethod::StickBreaking, 5, 0), DomainError);
}

TEST(MeasureThroughputTest, FixedBatchIsDeterministicInCounts) {
  BenchOptions options;
  options.batch = 2000;
  options.repetitions = 5;
  const auto a = measure_throughput(SamplerMethod::RejectionCube, 5, options);
  const auto b = measure_throughput(SamplerMethod::RejectionCube, 5, options);
  EXPECT_EQ(a.audit.total_draws, b.audit.total_draws);
  EXPECT_EQ(a.batch, 2000u);
  EXPECT_EQ(a.repetitions, 5u);
  EXPECT_GT(a.wall_ms, 0.0);
  EXPECT_GT(a.samples_per_s, 0.0);
}

TEST(MeasureThroughputTest, ParallelModeReportsSameCounts) {
  BenchOptions options;
  options.batch = 10000;
  options.jobs = 2;
  const auto r = measure_throughput(SamplerMethod::StickBreaking, 6, options);
  EXPECT_EQ(r.audit.total_draws, 50000u);
  EXPECT_EQ(r.audit.total_powers, 40000u);
}

TEST(MeasureThroughputTest, CalibratesBatch) {
  BenchOptions options;
  options.target_ms = 5.0;
  const auto r = measure_throughput(SamplerMethod::SortedSpacings, 16, options);
  EXPECT_GT(r.batch, 1u);
  EXPECT_EQ(r.audit.batch, r.batch);
}

TEST(MeasureThroughputTest, StickBreakingCostGrowsWithDimension) {
  BenchOptions options;
  options.target_ms = 10.0;
  double previous = 0.0;
  for (int n : {2, 8, 64, 512, 4096}) {
    const double ns = measure_throughput(SamplerMethod::StickBreaking, n, options).ns_per_sample();
    EXPECT_GE(ns, previous) << "n=" << n;
    previous = ns;
  }
}

TEST(CsvTest, HeaderAndRow) {
  EXPECT_EQ(csv_header(),
            "method,n,batch,wall_ms,samples_per_s,draws_per_sample,powers_per_sample");
  BenchReport r;
  r.method = SamplerMethod::SortedSpacings;
  r.n = 10;
  r.batch = 4;
  r.wall_ms = 0.5;
  r.samples_per_s = 8000;
  r.audit = {4, 36, 0};
  EXPECT_EQ(to_csv_row(r), "spacings,10,4,0.5,8000,9,0");
}

}  // namespace
}  // namespace simplexgen::bench
