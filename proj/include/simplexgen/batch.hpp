// Copyright 2026 The simplexgen Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>

#include "simplexgen/marginal.hpp"
#include "simplexgen/samplers.hpp"
#include "simplexgen/simplex_point.hpp"

namespace simplexgen {

/// Points per substream block. Block b draws from
/// Xoshiro256Source(substream_seed(seed, b)), so the output is a function of
/// (seed, n, method, model, count) only, whatever the number of workers.
inline constexpr std::size_t kBatchBlockSize = 4096;

struct BatchSpec {
  SamplerMethod method = SamplerMethod::StickBreaking;
  MarginalModel model = MarginalModel::Corrected;
  int n = 3;
  std::size_t count = 1;
  std::uint64_t seed = 0;
  unsigned jobs = 1;  ///< worker threads; 0 means hardware concurrency
};

/// Totals accumulated over a whole batch.
struct BatchStats {
  std::uint64_t draws = 0;
  SampleCounters counters;
};

/// Generates spec.count points. Blocks are handed to workers round-robin;
/// output order is by block index.
SimplexBatch generate_batch(const BatchSpec& spec, BatchStats* stats = nullptr);

}  // namespace simplexgen
