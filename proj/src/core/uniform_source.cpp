// Copyright 2026 The simplexgen Authors
// SPDX-License-Identifier: Apache-2.0

#include "simplexgen/uniform_source.hpp"

#include <string>
#include <utility>

#include "simplexgen/errors.hpp"

namespace simplexgen {
namespace {

constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
  return (x << k) | (x >> (64 - k));
}

}  // namespace

Xoshiro256Source::Xoshiro256Source(std::uint64_t seed) noexcept : seed_(seed) {
  std::uint64_t sm = seed;
  for (auto& word : state_) word = splitmix64(sm);
}

std::uint64_t Xoshiro256Source::next_u64() noexcept {
  const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
  const std::uint64_t t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = rotl(state_[3], 45);
  return result;
}

double Xoshiro256Source::next_uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

ReplaySource::ReplaySource(std::vector<double> values)
    : values_(std::move(values)) {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    const double v = values_[i];
    if (!(v >= 0.0 && v < 1.0)) {
      throw DomainError("replay value #" + std::to_string(i) +
                        " is not in [0, 1)");
    }
  }
}

double ReplaySource::next_uniform() {
  if (pos_ == values_.size()) {
    throw UsageError("replay source exhausted after " +
                     std::to_string(values_.size()) + " draws");
  }
  return values_[pos_++];
}

}  // namespace simplexgen
