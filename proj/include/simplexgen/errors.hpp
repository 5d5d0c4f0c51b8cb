// Copyright 2026 The simplexgen Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace simplexgen {

/// A numeric argument lies outside the domain an operation is defined on.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The caller asked for something the operation refuses to do
/// (too few samples, unsorted input, bad configuration).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The rejection sampler ran out of trials before accepting a point.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(std::uint64_t trials)
      : std::runtime_error("rejection budget exhausted after " +
                           std::to_string(trials) + " trials"),
        trials_(trials) {}

  std::uint64_t trials() const noexcept { return trials_; }

 private:
  std::uint64_t trials_;
};

}  // namespace simplexgen
