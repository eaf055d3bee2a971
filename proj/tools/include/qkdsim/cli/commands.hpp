// Copyright 2026 The qkdsim Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "qkdsim/engine.hpp"

namespace qkdsim::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitUsage = 2;

struct CommonArgs {
  std::string config_path;             // empty: built-in defaults
  std::vector<std::string> overrides;  // key=value
  std::string output;                  // overrides the config's output key
};

struct SweepArgs {
  CommonArgs common;
  std::string parameter;
  std::string values;  // comma separated
  double confidence = 0.95;
  std::optional<unsigned> threads;  // default: QKDSIM_THREADS, else 1
};

struct TraceArgs {
  CommonArgs common;
  std::uint64_t rows = 0;
};

int cmd_run(const CommonArgs& args, std::ostream& out, std::ostream& err);
int cmd_sweep(const SweepArgs& args, std::ostream& out, std::ostream& err);
int cmd_trace(const TraceArgs& args, std::ostream& out, std::ostream& err);
int cmd_noise_budget(double current_a, double temperature_k, double load_ohm, std::ostream& out,
                     std::ostream& err);

/// Parses a full command line (args[0] is the program name) and dispatches.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

void write_run_csv(std::ostream& out, const RunConfig& config, const RunStats& stats,
                   double confidence = 0.95);
void write_trace_csv(std::ostream& out, Receiver receiver, std::span<const TraceRecord> trace);
void write_sweep_csv(std::ostream& out, const RunConfig& base, std::string_view parameter,
                     std::span<const SweepRow> rows, double confidence = 0.95);

/// Parses QKDSIM_THREADS. Null means sequential. Throws ConfigError on a
/// value that is not a positive integer.
unsigned threads_from_env(const char* value);

std::vector<double> parse_value_list(std::string_view text);

}  // namespace qkdsim::cli
