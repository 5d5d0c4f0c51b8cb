// Copyright 2026 The simplexgen Authors
// SPDX-License-Identifier: Apache-2.0

#include <iostream>
#include <string>
#include <vector>

#include "simplexgen/cli/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return simplexgen::cli::run_cli(args, std::cout, std::cerr);
}
