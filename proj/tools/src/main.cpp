// Copyright 2026 The qkdsim Authors.
// SPDX-License-Identifier: Apache-2.0

#include <iostream>
#include <string>
#include <vector>

#include "qkdsim/cli/commands.hpp"

int main(int argc, char** argv) {
  try {
    return qkdsim::cli::run_cli(std::vector<std::string>(argv, argv + argc), std::cout,
                                std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return qkdsim::cli::kExitInternal;
  }
}
