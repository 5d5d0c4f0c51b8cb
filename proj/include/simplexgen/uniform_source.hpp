// Copyright 2026 The simplexgen Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace simplexgen {

/// A sequential stream of uniforms on [0, 1) with a draw counter.
///
/// Every sampler in the library consumes randomness exclusively through
/// next(), so draw_count() deltas are exact audits of how many uniforms a
/// sampler used. A source is single-owner; do not draw from one source on
/// several threads.
class UniformSource {
 public:
  virtual ~UniformSource() = default;

  double next() {
    const double u = next_uniform();
    ++draw_count_;
    return u;
  }

  std::uint64_t draw_count() const noexcept { return draw_count_; }

 protected:
  UniformSource() = default;
  UniformSource(const UniformSource&) = default;
  UniformSource& operator=(const UniformSource&) = default;

  virtual double next_uniform() = 0;

 private:
  std::uint64_t draw_count_ = 0;
};

/// SplitMix64 step. Advances `state` and returns the mixed output.
constexpr std::uint64_t splitmix64(std::uint64_t& state) noexcept {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Seed of substream `index` derived from `base_seed`.
///
/// Frozen mapping: splitmix64 applied to base_seed, then to the result xor'd
/// with the index. Workers and batch blocks use this so that output never
/// depends on how work is split across threads.
constexpr std::uint64_t substream_seed(std::uint64_t base_seed,
                                       std::uint64_t index) noexcept {
  std::uint64_t state = base_seed;
  std::uint64_t mixed = splitmix64(state) ^ index;
  return splitmix64(mixed);
}

/// xoshiro256++ seeded by four consecutive SplitMix64 outputs of the seed.
///
/// Uniforms are the top 53 bits of each output scaled by 2^-53, so every
/// value is a multiple of 2^-53 in [0, 1 - 2^-53]. Period 2^256 - 1.
class Xoshiro256Source final : public UniformSource {
 public:
  explicit Xoshiro256Source(std::uint64_t seed) noexcept;

  std::uint64_t seed() const noexcept { return seed_; }

  std::uint64_t next_u64() noexcept;

 protected:
  double next_uniform() override;

 private:
  std::uint64_t seed_;
  std::array<std::uint64_t, 4> state_{};
};

/// Replays a fixed list of uniforms; used for hand-traced examples and
/// probability-integral-transform round trips.
class ReplaySource final : public UniformSource {
 public:
  /// Throws DomainError if any value is outside [0, 1).
  explicit ReplaySource(std::vector<double> values);

  std::size_t remaining() const noexcept { return values_.size() - pos_; }

 protected:
  /// Throws UsageError once the recorded values are exhausted.
  double next_uniform() override;

 private:
  std::vector<double> values_;
  std::size_t pos_ = 0;
};

}  // namespace simplexgen
