// Copyright 2026 The simplexgen Authors
// SPDX-License-Identifier: Apache-2.0

#include "simplexgen/samplers.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "simplexgen/errors.hpp"
#include "simplexgen/marginal.hpp"

namespace simplexgen {
namespace {

constexpr auto kCorrected = MarginalModel::Corrected;
constexpr auto kLiteral = MarginalModel::PaperLiteral;

void expect_point(const SimplexPoint& p, const std::vector<double>& expected,
                  double tol = 1e-15) {
  ASSERT_EQ(p.dim(), expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    EXPECT_NEAR(p[i], expected[i], tol) << "coordinate " << i;
  }
}

TEST(SamplerMethodTest, NamesRoundTrip) {
  for (auto m : {SamplerMethod::StickBreaking, SamplerMethod::RejectionCube,
                 SamplerMethod::SortedSpacings, SamplerMethod::ExponentialNormalize,
                 SamplerMethod::RescaledUniforms}) {
    EXPECT_EQ(parse_sampler_method(to_string(m)), m);
  }
  EXPECT_FALSE(parse_sampler_method("dirichlet").has_value());
  EXPECT_FALSE(is_uniform(SamplerMethod::RescaledUniforms));
  EXPECT_TRUE(is_uniform(SamplerMethod::StickBreaking));
}

TEST(StickBreakingTest, HandTracedStreams) {
  ReplaySource two({0.3});
  expect_point(sample_stick_breaking(2, kCorrected, two), {0.3, 0.7});

  ReplaySource three({0.75, 0.5});
  expect_point(sample_stick_breaking(3, kCorrected, three), {0.5, 0.25, 0.25});

  // Literal at the last step of n=3: x2 = 0.5 (1 - sqrt(0.5)).
  ReplaySource literal({0.75, 0.5});
  expect_point(sample_stick_breaking(3, kLiteral, literal),
               {0.5, 0.5 * (1 - std::sqrt(0.5)), 0.5 * std::sqrt(0.5)});
}

TEST(StickBreakingTest, CoordinatesAreTheInverseCdfChain) {
  const std::vector<double> stream{0.1, 0.9, 0.42, 0.0, 0.77, 0.3};
  for (auto model : {kCorrected, kLiteral}) {
    ReplaySource source(stream);
    const auto p = sample_stick_breaking(7, model, source);
    double r = 1.0;
    for (int j = 1; j <= 6; ++j) {
      const double x = inverse_cdf(model, 7, j, r, stream[j - 1]);
      ASSERT_EQ(p[j - 1], x);
      r -= x;
    }
    EXPECT_EQ(p[6], r);
  }
}

TEST(StickBreakingTest, DrawAndPowerCounts) {
  Xoshiro256Source source(3);
  for (int n : {2, 3, 10, 100, 1024}) {
    SampleCounters counters;
    const auto before = source.draw_count();
    sample_stick_breaking(n, kCorrected, source, &counters);
    EXPECT_EQ(source.draw_count() - before, static_cast<std::uint64_t>(n - 1));
    EXPECT_EQ(counters.power_evals, static_cast<std::uint64_t>(n - 2));

    SampleCounters literal;
    sample_stick_breaking(n, kLiteral, source, &literal);
    EXPECT_EQ(literal.power_evals, n == 2 ? 0u : static_cast<std::uint64_t>(n - 1));
  }
}

TEST(StickBreakingTest, RecordedStreamRecoveredByStepwiseCdf) {
  Xoshiro256Source gen(17);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 99;
    std::vector<double> stream(static_cast<std::size_t>(n - 1));
    for (double& u : stream) u = gen.next();
    ReplaySource source(stream);
    const auto p = sample_stick_breaking(n, kCorrected, source);
    double r = 1.0;
    for (int j = 1; j <= n - 1; ++j) {
      const double u = marginal_cdf(kCorrected, n, j, r, p[j - 1]);
      ASSERT_NEAR(u, stream[j - 1], 1e-9 * stream[j - 1] + 1e-300);
      r -= p[j - 1];
    }
  }
}

TEST(RejectionTest, Examples) {
  ReplaySource two({0.4});
  expect_point(sample_rejection(2, two), {0.4, 0.6});

  ReplaySource three({0.8, 0.5, 0.2, 0.3});
  SampleCounters counters;
  expect_point(sample_rejection(3, three, 100, &counters), {0.2, 0.3, 0.5});
  EXPECT_EQ(counters.trials, 2u);
  EXPECT_EQ(three.draw_count(), 4u);
}

TEST(RejectionTest, BudgetExhaustionCarriesTrials) {
  ReplaySource source({0.9, 0.9, 0.8, 0.7, 0.6, 0.95});
  try {
    sample_rejection(3, source, 3);
    FAIL() << "expected BudgetExceeded";
  } catch (const BudgetExceeded& e) {
    EXPECT_EQ(e.trials(), 3u);
  }
}

TEST(RejectionTest, DefaultBudget) {
  EXPECT_EQ(default_rejection_budget(2), 1000u);
  EXPECT_EQ(default_rejection_budget(4), 6000u);
  EXPECT_EQ(default_rejection_budget(8), 5'040'000u);
  EXPECT_EQ(default_rejection_budget(9), 10'000'000u);
  EXPECT_EQ(default_rejection_budget(1000), 10'000'000u);
}

TEST(RejectionTest, AcceptanceRateAtFourOutcomes) {
  Xoshiro256Source source(8);
  SampleCounters counters;
  std::vector<double> out(4);
  std::uint64_t accepted = 0;
  while (counters.trials < 200000) {
    sample_rejection(out, source, 1'000'000, &counters);
    ++accepted;
  }
  const double rate = static_cast<double>(accepted) / counters.trials;
  // Binomial standard error at p = 1/6 and 2e5 trials is about 8.3e-4.
  EXPECT_NEAR(rate, 1.0 / 6.0, 5 * 8.4e-4);
}

TEST(RejectionTest, ConditionalDensityOfSecondCoordinateMatchesClosedForm) {
  // Histogram x2 among oracle points whose x1 is close to 0.5 and compare
  // with the Corrected step-2 density at r = 0.5, x = 0.25, which is 2.
  Xoshiro256Source source(77);
  std::vector<double> out(4);
  std::size_t band = 0;
  std::size_t in_bin = 0;
  for (int i = 0; i < 4'000'000; ++i) {
    sample_rejection(out, source, 1'000'000);
    if (std::fabs(out[0] - 0.5) < 0.01) {
      ++band;
      if (std::fabs(out[1] - 0.25) < 0.01) ++in_bin;
    }
  }
  ASSERT_GT(band, 40000u);
  const double density = static_cast<double>(in_bin) / band / 0.02;
  EXPECT_NEAR(density, marginal_pdf(kCorrected, 4, 2, 0.5, 0.25), 0.2);
  EXPECT_GT(std::fabs(density - marginal_pdf(kLiteral, 4, 2, 0.5, 0.25)), 0.3);
}

TEST(SortedSpacingsTest, Examples) {
  ReplaySource three({0.7, 0.2});
  expect_point(sample_sorted_spacings(3, three), {0.2, 0.5, 0.3}, 1e-15);
  ReplaySource two({0.9});
  expect_point(sample_sorted_spacings(2, two), {0.9, 0.1}, 1e-15);
}

TEST(ExponentialTest, Examples) {
  ReplaySource equal({0.3, 0.3});
  expect_point(sample_exponential(2, equal), {0.5, 0.5});
  ReplaySource three({1 - std::exp(-1.0), 1 - std::exp(-2.0), 1 - std::exp(-1.0)});
  expect_point(sample_exponential(3, three), {0.25, 0.5, 0.25}, 1e-12);
  ReplaySource zeros({0.0, 0.0, 0.0});
  expect_point(sample_exponential(3, zeros), {1.0 / 3, 1.0 / 3, 1.0 / 3});
}

TEST(RescaledTest, Examples) {
  ReplaySource two({0.2, 0.6});
  expect_point(sample_rescaled_uniforms(2, two), {0.25, 0.75});
  ReplaySource equal({0.4, 0.4, 0.4});
  expect_point(sample_rescaled_uniforms(3, equal), {1.0 / 3, 1.0 / 3, 1.0 / 3});
  ReplaySource redraw({0.0, 0.0, 0.1, 0.3});
  expect_point(sample_rescaled_uniforms(2, redraw), {0.25, 0.75});
  EXPECT_EQ(redraw.draw_count(), 4u);
}

TEST(SamplersTest, DrawAccounting) {
  Xoshiro256Source source(21);
  for (int n : {2, 5, 64, 513}) {
    auto drawn = [&](SamplerMethod m) {
      const auto before = source.draw_count();
      sample(m, n, kCorrected, source);
      return source.draw_count() - before;
    };
    const auto n64 = static_cast<std::uint64_t>(n);
    EXPECT_EQ(drawn(SamplerMethod::StickBreaking), n64 - 1);
    EXPECT_EQ(drawn(SamplerMethod::SortedSpacings), n64 - 1);
    EXPECT_EQ(drawn(SamplerMethod::ExponentialNormalize), n64);
    EXPECT_EQ(drawn(SamplerMethod::RescaledUniforms), n64);
  }
}

TEST(SamplersTest, OutputValidityAcrossDimensionsAndSeeds) {
  const std::vector<SamplerMethod> fast{
      SamplerMethod::StickBreaking, SamplerMethod::SortedSpacings,
      SamplerMethod::ExponentialNormalize, SamplerMethod::RescaledUniforms};
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Xoshiro256Source source(seed);
    std::vector<double> out;
    // Every n in 2..1024 is covered across the 100 seeds; each seed also
    // hits the extremes.
    for (int n = 2 + static_cast<int>(seed % 10); n <= 1024; n += 10) {
      out.resize(static_cast<std::size_t>(n));
      for (auto m : fast) {
        for (auto model : {kCorrected, kLiteral}) {
          sample(m, out, model, source);
          ASSERT_TRUE(is_simplex_point(out))
              << to_string(m) << " n=" << n << " seed=" << seed;
          if (m != SamplerMethod::StickBreaking) break;
        }
      }
    }
    for (int n : {2, 1024}) {
      out.resize(static_cast<std::size_t>(n));
      for (auto m : fast) {
        sample(m, out, kCorrected, source);
        ASSERT_TRUE(is_simplex_point(out));
      }
    }
    for (int n = 2; n <= 7; ++n) {
      out.resize(static_cast<std::size_t>(n));
      sample(SamplerMethod::RejectionCube, out, kCorrected, source);
      ASSERT_TRUE(is_simplex_point(out)) << "rejection n=" << n;
    }
  }
}

TEST(SamplersTest, DeterministicForIdenticalSeed) {
  for (auto m : {SamplerMethod::StickBreaking, SamplerMethod::RejectionCube,
                 SamplerMethod::SortedSpacings, SamplerMethod::ExponentialNormalize,
                 SamplerMethod::RescaledUniforms}) {
    Xoshiro256Source a(1234);
    Xoshiro256Source b(1234);
    for (int i = 0; i < 100; ++i) {
      ASSERT_EQ(sample(m, 5, kCorrected, a), sample(m, 5, kCorrected, b));
    }
  }
}

TEST(SamplersTest, RejectsTooFewOutcomes) {
  Xoshiro256Source source(1);
  EXPECT_THROW(sample_stick_breaking(1, kCorrected, source), DomainError);
  EXPECT_THROW(sample_rejection(1, source), DomainError);
  EXPECT_THROW(sample_sorted_spacings(0, source), DomainError);
  EXPECT_THROW(sample_exponential(1, source), DomainError);
  EXPECT_THROW(sample_rescaled_uniforms(1, source), DomainError);
}

TEST(SettleResidualTest, ClampsTinyNegativeResidual) {
  std::vector<double> coords{0.2, 0.5, 0.3 + 5e-13, -5e-13};
  detail::settle_residual(coords);
  EXPECT_EQ(coords[3], 0.0);
  EXPECT_DOUBLE_EQ(coords[1], 0.5 - 5e-13);
  EXPECT_EQ(coords[0], 0.2);

  std::vector<double> fine{0.5, 0.5};
  detail::settle_residual(fine);
  EXPECT_EQ(fine[1], 0.5);

  std::vector<double> broken{0.5, 0.5, -1e-9};
  EXPECT_THROW(detail::settle_residual(broken), std::logic_error);
}

}  // namespace
}  // namespace simplexgen
