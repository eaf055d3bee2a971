// Copyright 2026 The qkdsim Authors.
// SPDX-License-Identifier: Apache-2.0

#include "qkdsim/cli/commands.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <memory>

#include <CLI11.hpp>

#include "qkdsim/analysis.hpp"
#include "qkdsim/cli/config_file.hpp"
#include "qkdsim/cli/csv.hpp"
#include "qkdsim/config_fields.hpp"
#include "qkdsim/error.hpp"
#include "qkdsim/format.hpp"

namespace qkdsim::cli {

namespace {

constexpr const char* kColumnsHelp = R"(Output columns
  run:    receiver, n_symbols, mean_photons_per_bit, seed, sent, detected, sifted,
          errors, discarded_basis, discarded_no_detection, discarded_ambiguous,
          qber, qber_ci_low, qber_ci_high, qber_theory, z_score_vs_theory,
          raw_detection_rate_hz, sifted_key_rate_hz
  sweep:  <parameter>, qber, qber_ci_low, qber_ci_high, raw_hz, sifted_hz,
          z_score_vs_theory
  trace:  index, alice_basis, alice_bit, bob_basis, basis_match, outcome,
          sample (homodyne) or click1, click2 (photon counting), discarded
Undefined values (no sifted bits) are written as nan.
Environment: QKDSIM_THREADS caps sweep parallelism (default sequential).
Exit status: 0 success, 2 usage or configuration error, 1 internal error.)";

CliConfig resolve_config(const CommonArgs& args) {
  CliConfig config = args.config_path.empty() ? CliConfig{} : load_config(args.config_path);
  for (const auto& o : args.overrides) apply_override(config, o);
  if (!args.output.empty()) config.output = args.output;
  validate(config.run);
  return config;
}

// Runs `write` against the configured file, or stdout when no path is set.
bool with_output(const std::string& path, std::ostream& out,
                 const std::function<void(std::ostream&)>& write) {
  if (path.empty() || path == "-") {
    write(out);
    return false;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw ConfigError("output", "cannot open '" + path + "' for writing");
  write(file);
  file.flush();
  if (!file) throw std::runtime_error("write to '" + path + "' failed");
  return true;
}

std::string qber_text(const RunStats& s) {
  return s.qber ? format_number(*s.qber) : "nan";
}

void print_summary(std::ostream& os, const RunConfig& config, const RunStats& s) {
  const TheoryPoint tp = make_theory_point(0.0, predicted_qber(config), s);
  const ExpectedRates expected = expected_rates(config);
  os << "receiver            " << to_string(config.receiver) << '\n'
     << "symbols sent        " << format_number(s.sent) << '\n'
     << "detected            " << format_number(s.detected) << '\n'
     << "sifted              " << format_number(s.sifted) << '\n'
     << "errors              " << format_number(s.errors) << '\n'
     << "discarded           basis " << format_number(s.discarded_basis) << ", no detection "
     << format_number(s.discarded_no_detection) << ", ambiguous " << format_number(s.discarded_ambiguous) << '\n'
     << "qber                " << qber_text(s);
  if (s.qber) {
    os << "  95% CI [" << format_fixed(tp.ci_low, 6) << ", " << format_fixed(tp.ci_high, 6)
       << "]";
  }
  os << "  theory " << format_fixed(tp.predicted, 6) << "  z " << format_fixed(tp.z_score, 2)
     << '\n'
     << "raw rate            " << format_fixed(s.raw_detection_rate_hz, 1) << " Hz (expected "
     << format_fixed(expected.raw_hz, 1) << ")\n"
     << "sifted key rate     " << format_fixed(s.sifted_key_rate_hz, 1) << " Hz (expected "
     << format_fixed(expected.sifted_hz, 1) << ")\n";
}

template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace

std::vector<double> parse_value_list(std::string_view text) {
  std::vector<double> values;
  std::size_t pos = 0;
  while (pos <= text.size() && !text.empty()) {
    auto comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    auto item = text.substr(pos, comma - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size()) {
      throw ConfigError("values", "cannot parse '" + std::string(item) + "' as a number");
    }
    values.push_back(v);
    pos = comma + 1;
  }
  if (values.empty()) throw ConfigError("values", "empty value list");
  return values;
}

unsigned threads_from_env(const char* value) {
  if (value == nullptr) return 1;
  const std::string_view text(value);
  unsigned n = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), n);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size() || n == 0) {
    throw ConfigError("QKDSIM_THREADS", "must be a positive integer, got '" +
                                            std::string(text) + "'");
  }
  return n;
}

void write_run_csv(std::ostream& out, const RunConfig& config, const RunStats& s,
                   double confidence) {
  const TheoryPoint tp = make_theory_point(0.0, predicted_qber(config), s, confidence);
  write_csv_row(out, {"receiver", "n_symbols", "mean_photons_per_bit", "seed", "sent",
                      "detected", "sifted", "errors", "discarded_basis",
                      "discarded_no_detection", "discarded_ambiguous", "qber", "qber_ci_low",
                      "qber_ci_high", "qber_theory", "z_score_vs_theory",
                      "raw_detection_rate_hz", "sifted_key_rate_hz"});
  write_csv_row(out, std::vector<std::string>{
                         std::string(to_string(config.receiver)),
                         format_number(config.n_symbols),
                         format_number(config.mean_photons_per_bit),
                         format_number(config.seed),
                         format_number(s.sent),
                         format_number(s.detected),
                         format_number(s.sifted),
                         format_number(s.errors),
                         format_number(s.discarded_basis),
                         format_number(s.discarded_no_detection),
                         format_number(s.discarded_ambiguous),
                         qber_text(s),
                         format_number(tp.ci_low),
                         format_number(tp.ci_high),
                         format_number(tp.predicted),
                         format_number(tp.z_score),
                         format_number(s.raw_detection_rate_hz),
                         format_number(s.sifted_key_rate_hz),
                     });
}

void write_trace_csv(std::ostream& out, Receiver receiver, std::span<const TraceRecord> trace) {
  const bool homodyne = receiver == Receiver::Homodyne;
  if (homodyne) {
    write_csv_row(out, {"index", "alice_basis", "alice_bit", "bob_basis", "basis_match",
                        "outcome", "sample", "discarded"});
  } else {
    write_csv_row(out, {"index", "alice_basis", "alice_bit", "bob_basis", "basis_match",
                        "outcome", "click1", "click2", "discarded"});
  }
  for (const auto& r : trace) {
    const bool kept = r.basis_match() && std::holds_alternative<Bit>(r.outcome);
    std::vector<std::string> row{format_number(r.index),
                                 std::string(to_string(r.alice_basis)),
                                 std::string(to_string(r.alice_bit)),
                                 std::string(to_string(r.bob_basis)),
                                 r.basis_match() ? "1" : "0",
                                 std::string(to_string(r.outcome))};
    if (homodyne) {
      row.push_back(r.homodyne_sample ? format_number(*r.homodyne_sample) : "nan");
    } else {
      const ClickPair c = r.clicks.value_or(ClickPair{});
      row.emplace_back(c.click1 ? "1" : "0");
      row.emplace_back(c.click2 ? "1" : "0");
    }
    row.emplace_back(kept ? "0" : "1");
    write_csv_row(out, row);
  }
}

void write_sweep_csv(std::ostream& out, const RunConfig& base, std::string_view parameter,
                     std::span<const SweepRow> rows, double confidence) {
  write_csv_row(out, {parameter, "qber", "qber_ci_low", "qber_ci_high", "raw_hz", "sifted_hz",
                      "z_score_vs_theory"});
  for (const auto& row : rows) {
    RunConfig c = base;
    set_numeric_field(c, parameter, row.value);
    const TheoryPoint tp = make_theory_point(row.value, predicted_qber(c), row.stats, confidence);
    write_csv_row(out, std::vector<std::string>{
                           format_number(row.value), qber_text(row.stats),
                           format_number(tp.ci_low), format_number(tp.ci_high),
                           format_number(row.stats.raw_detection_rate_hz),
                           format_number(row.stats.sifted_key_rate_hz),
                           format_number(tp.z_score)});
  }
}

int cmd_run(const CommonArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const CliConfig config = resolve_config(args);
    const std::size_t trace_limit = config.trace ? config.run.n_symbols : 0;
    const RunResult result = run(config.run, trace_limit);
    const bool to_file = with_output(config.output, out, [&](std::ostream& os) {
      write_run_csv(os, config.run, result.stats);
    });
    if (config.trace) {
      with_output(config.trace_output, out, [&](std::ostream& os) {
        write_trace_csv(os, config.run.receiver, result.trace);
      });
    }
    print_summary(to_file ? out : err, config.run, result.stats);
    return kExitOk;
  });
}

int cmd_sweep(const SweepArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const CliConfig config = resolve_config(args.common);
    if (!is_sweepable(args.parameter)) {
      std::string names;
      for (auto n : sweepable_fields()) names += "\n  " + std::string(n);
      throw ConfigError(args.parameter, "not a sweepable parameter; sweepable names:" + names);
    }
    const std::vector<double> values = parse_value_list(args.values);
    SweepOptions options;
    options.threads = args.threads ? *args.threads : threads_from_env(std::getenv("QKDSIM_THREADS"));
    const auto rows = sweep(config.run, args.parameter, values, options);
    const bool to_file = with_output(config.output, out, [&](std::ostream& os) {
      write_sweep_csv(os, config.run, args.parameter, rows, args.confidence);
    });
    (to_file ? out : err) << "sweep of " << args.parameter << ": "
                          << format_number(std::uint64_t{rows.size()}) << " runs of "
                          << format_number(config.run.n_symbols) << " symbols\n";
    return kExitOk;
  });
}

int cmd_trace(const TraceArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const CliConfig config = resolve_config(args.common);
    if (args.rows > config.run.n_symbols) {
      throw ConfigError("n", "requested " + std::to_string(args.rows) +
                                 " rows but n_symbols is " +
                                 std::to_string(config.run.n_symbols));
    }
    // Symbols are simulated in order, so a shorter run reproduces the same prefix.
    RunConfig prefix = config.run;
    prefix.n_symbols = std::max<std::uint64_t>(args.rows, 1);
    const RunResult result = run(prefix, args.rows);
    const std::string& path = config.trace_output.empty() ? config.output : config.trace_output;
    with_output(path, out, [&](std::ostream& os) {
      write_trace_csv(os, config.run.receiver, result.trace);
    });
    return kExitOk;
  });
}

int cmd_noise_budget(double current_a, double temperature_k, double load_ohm, std::ostream& out,
                     std::ostream& err) {
  return guarded(err, [&] {
    const NoiseBudget nb = noise_budget(current_a, temperature_k, load_ohm);
    out << "thermal " << format_fixed(nb.thermal_psd_dbm_per_hz, 2) << " dBm/Hz\n"
        << "shot " << format_fixed(nb.shot_psd_dbm_per_hz, 2) << " dBm/Hz\n"
        << "margin " << format_fixed(nb.margin_db, 2) << " dB\n";
    return kExitOk;
  });
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Monte Carlo simulator of a BB84 QPSK link with photon-counting and "
               "balanced homodyne receivers",
               "qkdsim"};
  app.footer(kColumnsHelp);
  app.require_subcommand(1);

  auto add_common = [](CLI::App* sub, CommonArgs& common) {
    sub->add_option("-c,--config", common.config_path, "key = value config file");
    sub->add_option("-s,--set", common.overrides, "override, key=value (repeatable)");
    sub->add_option("-o,--output", common.output, "output CSV path (default: stdout)");
  };

  CommonArgs run_args;
  auto* run_cmd = app.add_subcommand("run", "single run; writes one RunStats CSV row");
  add_common(run_cmd, run_args);

  SweepArgs sweep_args;
  auto* sweep_cmd = app.add_subcommand("sweep", "one run per value of a numeric parameter");
  add_common(sweep_cmd, sweep_args.common);
  sweep_cmd->add_option("-p,--param", sweep_args.parameter, "field path to sweep")->required();
  sweep_cmd->add_option("-v,--values", sweep_args.values, "comma-separated values")->required();
  sweep_cmd->add_option("--confidence", sweep_args.confidence, "Wilson interval confidence")
      ->check(CLI::Range(0.0, 1.0));
  unsigned threads = 0;
  auto* threads_opt = sweep_cmd->add_option("-j,--threads", threads, "parallel runs")
                          ->check(CLI::PositiveNumber);

  TraceArgs trace_args;
  auto* trace_cmd = app.add_subcommand("trace", "per-symbol trace of the first n symbols");
  add_common(trace_cmd, trace_args.common);
  trace_cmd->add_option("-n,--rows", trace_args.rows, "number of symbols to trace")->required();

  double current = 0.0, temperature = 290.0, load = 50.0;
  auto* nb_cmd = app.add_subcommand("noise-budget", "thermal vs shot noise densities");
  nb_cmd->add_option("--current", current, "photocurrent in A")->required();
  nb_cmd->add_option("--temperature", temperature, "temperature in K (default 290)");
  nb_cmd->add_option("--load", load, "load resistance in ohm (default 50)");

  std::vector<std::string> storage = args;
  if (storage.empty()) storage.emplace_back("qkdsim");
  std::vector<char*> argv;
  for (auto& a : storage) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
  }

  if (*run_cmd) return cmd_run(run_args, out, err);
  if (*sweep_cmd) {
    if (*threads_opt) sweep_args.threads = threads;
    return cmd_sweep(sweep_args, out, err);
  }
  if (*trace_cmd) return cmd_trace(trace_args, out, err);
  return cmd_noise_budget(current, temperature, load, out, err);
}

}  // namespace qkdsim::cli
