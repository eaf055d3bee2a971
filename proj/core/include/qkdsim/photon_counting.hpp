// Copyright 2026 The qkdsim Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>

#include "qkdsim/rng.hpp"

namespace qkdsim {

/// Gated APD pair. The dark-count and dead-time defaults are representative
/// of cooled InGaAs devices; they are configuration, not measured values.
struct ApdParams {
  double quantum_efficiency = 0.1;
  double dark_prob_per_gate = 1e-4;
  double gate_width_ns = 2.5;
  double dead_time_us = 10.0;
  double rep_rate_hz = 4e6;
};

struct ClickPair {
  bool click1 = false;
  bool click2 = false;

  bool any() const noexcept { return click1 || click2; }
  friend bool operator==(const ClickPair&, const ClickPair&) = default;
};

/// 1 - (1 - p_d) exp(-eta m). Throws std::domain_error for m < 0.
double click_prob(double mean_photons_at_port, const ApdParams& apd);

/// Independent click draws for the two detectors. A closed gate yields no
/// clicks and consumes no randomness.
ClickPair sample_clicks(double m1, double m2, const ApdParams& apd, bool gate_open, Rng& rng);

/// Whether the gate at current_symbol is armed. Closed iff a prior click
/// exists and less than dead_time has elapsed since it (non-paralyzable).
bool dead_time_gating(std::optional<std::uint64_t> last_click_symbol,
                      std::uint64_t current_symbol, const ApdParams& apd);

/// Non-paralyzable saturation: R p / (1 + R p tau). Never exceeds 1/tau.
double max_count_rate(const ApdParams& apd, double p_click);

/// Per-gate dark probability for a dark count rate, 1 - exp(-rate * gate).
double dark_prob_from_rate(double dark_rate_hz, double gate_width_ns);

}  // namespace qkdsim
