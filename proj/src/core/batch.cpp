// Copyright 2026 The simplexgen Authors
// SPDX-License-Identifier: Apache-2.0

#include "simplexgen/batch.hpp"

#include <algorithm>
#include <exception>
#include <thread>
#include <vector>

#include "simplexgen/errors.hpp"

namespace simplexgen {
namespace {

BatchStats fill_block(const BatchSpec& spec, SimplexBatch& batch,
                      std::size_t block) {
  Xoshiro256Source source(substream_seed(spec.seed, block));
  BatchStats stats;
  const std::size_t begin = block * kBatchBlockSize;
  const std::size_t end = std::min(begin + kBatchBlockSize, batch.size());
  for (std::size_t i = begin; i < end; ++i) {
    sample(spec.method, batch.row(i), spec.model, source, &stats.counters);
  }
  stats.draws = source.draw_count();
  return stats;
}

}  // namespace

SimplexBatch generate_batch(const BatchSpec& spec, BatchStats* stats) {
  if (spec.n < 2) throw DomainError("n must be >= 2");
  SimplexBatch batch(static_cast<std::size_t>(spec.n), spec.count);
  const std::size_t blocks =
      (spec.count + kBatchBlockSize - 1) / kBatchBlockSize;

  unsigned jobs = spec.jobs == 0 ? std::thread::hardware_concurrency() : spec.jobs;
  jobs = static_cast<unsigned>(
      std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(blocks, 1)));

  std::vector<BatchStats> per_block(blocks);
  if (jobs == 1) {
    for (std::size_t b = 0; b < blocks; ++b) {
      per_block[b] = fill_block(spec, batch, b);
    }
  } else {
    std::vector<std::exception_ptr> errors(jobs);
    std::vector<std::thread> workers;
    workers.reserve(jobs);
    for (unsigned w = 0; w < jobs; ++w) {
      workers.emplace_back([&, w] {
        try {
          for (std::size_t b = w; b < blocks; b += jobs) {
            per_block[b] = fill_block(spec, batch, b);
          }
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : workers) t.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  if (stats != nullptr) {
    *stats = {};
    for (const auto& s : per_block) {
      stats->draws += s.draws;
      stats->counters.power_evals += s.counters.power_evals;
      stats->counters.trials += s.counters.trials;
    }
  }
  return batch;
}

}  // namespace simplexgen
