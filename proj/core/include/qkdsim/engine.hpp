// Copyright 2026 The qkdsim Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qkdsim/homodyne.hpp"
#include "qkdsim/optics.hpp"
#include "qkdsim/photon_counting.hpp"
#include "qkdsim/protocol.hpp"

namespace qkdsim {

enum class Receiver : std::uint8_t { PhotonCounting, Homodyne };

std::string_view to_string(Receiver r) noexcept;

struct RunConfig {
  Receiver receiver = Receiver::PhotonCounting;
  std::uint64_t n_symbols = 100000;
  double mean_photons_per_bit = 0.1;
  double rep_rate_hz = 4e6;
  ChannelParams channel;
  VisibilityParams visibility;
  ApdParams apd;
  HomodyneParams homodyne;
  std::uint64_t seed = 1;
};

struct RunStats {
  std::uint64_t sent = 0;
  std::uint64_t detected = 0;  // symbols with a Bit verdict, any basis
  std::uint64_t sifted = 0;
  std::uint64_t errors = 0;
  std::uint64_t discarded_basis = 0;
  std::uint64_t discarded_no_detection = 0;
  std::uint64_t discarded_ambiguous = 0;
  std::optional<double> qber;  // empty when nothing was sifted
  double raw_detection_rate_hz = 0.0;
  double sifted_key_rate_hz = 0.0;

  friend bool operator==(const RunStats&, const RunStats&) = default;
};

struct TraceRecord {
  std::uint64_t index = 0;
  Basis alice_basis = Basis::B1;
  Bit alice_bit = Bit::Zero;
  Basis bob_basis = Basis::B1;
  DetectionOutcome outcome = NoDetection{};
  std::optional<double> homodyne_sample;  // receiver output, positive reads One
  std::optional<ClickPair> clicks;

  bool basis_match() const noexcept { return alice_basis == bob_basis; }
  friend bool operator==(const TraceRecord&, const TraceRecord&) = default;
};

struct RunResult {
  RunStats stats;
  std::vector<TraceRecord> trace;
};

/// Simulates config.n_symbols frames end to end. The first trace_limit
/// symbols are recorded. Identical config gives bit-identical results.
///
/// Photon counting splits the mean photon number (after loss) equally
/// between the signal and reference pulses and gates both APDs with one
/// shared dead time. The homodyne output is reported with the polarity of
/// detector 2 minus detector 1, so a positive sample reads bit One.
///
/// Throws ConfigError naming the first invalid field.
RunResult run(const RunConfig& config, std::size_t trace_limit = 0);

struct SweepRow {
  double value = 0.0;
  RunStats stats;
};

struct SweepOptions {
  unsigned threads = 1;
};

/// One independent run per value, seeded with derive_seed(seed, i). Rows
/// keep input order. Runs execute on up to options.threads threads.
std::vector<SweepRow> sweep(const RunConfig& base, std::string_view parameter,
                            std::span<const double> values, SweepOptions options = {});

struct ExpectedRates {
  double raw_hz = 0.0;
  double sifted_hz = 0.0;
};

/// Analytic detection and sifted-key rates for noiseless phases
/// (drift and modulator error are ignored).
ExpectedRates expected_rates(const RunConfig& config);

}  // namespace qkdsim
