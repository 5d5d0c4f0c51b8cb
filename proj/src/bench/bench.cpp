// Copyright 2026 The simplexgen Authors
// SPDX-License-Identifier: Apache-2.0

#include "simplexgen/bench/bench.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <vector>

#include "simplexgen/batch.hpp"
#include "simplexgen/errors.hpp"
#include "simplexgen/uniform_source.hpp"

namespace simplexgen::bench {
namespace {

using Clock = std::chrono::steady_clock;

struct Timed {
  double ms = 0.0;
  DrawAudit audit;
};

// Keeps the sampled values observable so the loop is not elided.
volatile double g_sink = 0.0;

Timed run_serial(SamplerMethod method, int n, std::size_t batch,
                 MarginalModel model, std::uint64_t seed) {
  std::vector<double> buffer(static_cast<std::size_t>(n));
  Xoshiro256Source source(seed);
  SampleCounters counters;
  double acc = 0.0;
  const auto start = Clock::now();
  for (std::size_t i = 0; i < batch; ++i) {
    sample(method, buffer, model, source, &counters);
    acc += buffer[0];
  }
  const auto stop = Clock::now();
  g_sink = acc;
  Timed t;
  t.ms = std::chrono::duration<double, std::milli>(stop - start).count();
  t.audit = {batch, source.draw_count(), counters.power_evals};
  return t;
}

Timed run_parallel(SamplerMethod method, int n, std::size_t batch,
                   MarginalModel model, std::uint64_t seed, unsigned jobs) {
  BatchSpec spec{method, model, n, batch, seed, jobs};
  BatchStats stats;
  const auto start = Clock::now();
  const SimplexBatch out = generate_batch(spec, &stats);
  const auto stop = Clock::now();
  g_sink = out.data()[0];
  Timed t;
  t.ms = std::chrono::duration<double, std::milli>(stop - start).count();
  t.audit = {batch, stats.draws, stats.counters.power_evals};
  return t;
}

std::string shortest(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

}  // namespace

DrawAudit audit_draws(SamplerMethod method, int n, std::size_t batch,
                      MarginalModel model, std::uint64_t seed) {
  if (n < 2) throw DomainError("n must be >= 2");
  if (batch == 0) throw DomainError("batch must be >= 1");
  return run_serial(method, n, batch, model, seed).audit;
}

BenchReport measure_throughput(SamplerMethod method, int n,
                               const BenchOptions& options) {
  if (n < 2) throw DomainError("n must be >= 2");
  auto run = [&](std::size_t batch) {
    return options.jobs > 1 ? run_parallel(method, n, batch, options.model,
                                           options.seed, options.jobs)
                            : run_serial(method, n, batch, options.model,
                                         options.seed);
  };

  std::size_t batch = options.batch;
  if (batch == 0) {
    batch = 1;
    for (;;) {
      const Timed probe = run(batch);
      if (probe.ms >= options.target_ms || batch >= (std::size_t{1} << 26)) break;
      // Jump close to the target once the probe is long enough to trust.
      if (probe.ms > 1.0) {
        batch = static_cast<std::size_t>(static_cast<double>(batch) *
                                         options.target_ms / probe.ms * 1.1) + 1;
      } else {
        batch *= 4;
      }
    }
  } else {
    run(batch);  // warm-up
  }

  const unsigned reps = std::max(options.repetitions, 5u);
  std::vector<double> times;
  DrawAudit audit;
  for (unsigned r = 0; r < reps; ++r) {
    const Timed t = run(batch);
    times.push_back(t.ms);
    audit = t.audit;
  }
  std::sort(times.begin(), times.end());
  const double median = reps % 2 == 1
                            ? times[reps / 2]
                            : 0.5 * (times[reps / 2 - 1] + times[reps / 2]);

  BenchReport report;
  report.method = method;
  report.n = n;
  report.batch = batch;
  report.repetitions = reps;
  report.wall_ms = median;
  report.samples_per_s =
      median > 0.0 ? static_cast<double>(batch) / (median / 1000.0) : 0.0;
  report.audit = audit;
  return report;
}

std::string csv_header() {
  return "method,n,batch,wall_ms,samples_per_s,draws_per_sample,powers_per_sample";
}

std::string to_csv_row(const BenchReport& r) {
  std::string row(to_string(r.method));
  row += ',' + std::to_string(r.n);
  row += ',' + std::to_string(r.batch);
  row += ',' + shortest(r.wall_ms);
  row += ',' + shortest(r.samples_per_s);
  row += ',' + shortest(r.audit.draws_per_sample());
  row += ',' + shortest(r.audit.powers_per_sample());
  return row;
}

}  // namespace simplexgen::bench
