// Copyright 2026 The simplexgen Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "simplexgen/cli/point_io.hpp"
#include "simplexgen/marginal.hpp"
#include "simplexgen/samplers.hpp"

namespace simplexgen::cli {

/// Process exit codes. Nothing else is ever returned.
enum ExitCode : int { kSuccess = 0, kFailure = 1, kUsage = 2 };

inline constexpr std::uint64_t kDefaultSeed = 42;
inline constexpr std::size_t kFig1bRows = 5000;

struct RunConfig {
  std::string subcommand;
  int n = 3;
  std::size_t count = 1;
  std::vector<SamplerMethod> methods{SamplerMethod::StickBreaking};
  MarginalModel model = MarginalModel::Corrected;
  std::uint64_t seed = kDefaultSeed;
  double alpha = 0.01;
  std::size_t samples = 50'000;
  std::vector<int> n_list;
  PointFormat format = PointFormat::Csv;
  std::string out_path;  ///< empty = stdout
  int precision = kMaxPrecision;
  unsigned jobs = 1;
  bool header = false;
  unsigned repeats = 1;        ///< test: independent-seed repetitions
  std::size_t batch = 0;       ///< bench: 0 = calibrate
  unsigned repetitions = 5;    ///< bench: timed repetitions
};

/// Parses argv-style arguments (without the program name) and runs the
/// subcommand. Help goes to `out`; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

// Subcommands. `out` receives the primary output when config.out_path is
// empty.
int cmd_sample(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_test(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_fig1b(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_bench(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace simplexgen::cli
