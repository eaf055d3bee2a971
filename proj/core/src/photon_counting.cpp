// Copyright 2026 The qkdsim Authors.
// SPDX-License-Identifier: Apache-2.0

#include "qkdsim/photon_counting.hpp"

#include <cmath>
#include <stdexcept>

namespace qkdsim {

double click_prob(double mean_photons_at_port, const ApdParams& apd) {
  if (!(mean_photons_at_port >= 0.0)) {
    throw std::domain_error("click_prob: mean photon number must be nonnegative");
  }
  // Same as 1 - (1 - p_d) exp(-eta m), arranged so that m = 0 returns p_d
  // exactly and small eta m keeps full precision.
  const double photon_click = -std::expm1(-apd.quantum_efficiency * mean_photons_at_port);
  return apd.dark_prob_per_gate + (1.0 - apd.dark_prob_per_gate) * photon_click;
}

ClickPair sample_clicks(double m1, double m2, const ApdParams& apd, bool gate_open,
                        Rng& rng) {
  if (!gate_open) return {};
  std::bernoulli_distribution d1(click_prob(m1, apd));
  std::bernoulli_distribution d2(click_prob(m2, apd));
  const bool c1 = d1(rng);
  const bool c2 = d2(rng);
  return {c1, c2};
}

bool dead_time_gating(std::optional<std::uint64_t> last_click_symbol,
                      std::uint64_t current_symbol, const ApdParams& apd) {
  if (!last_click_symbol) return true;
  const auto gates = static_cast<double>(current_symbol - *last_click_symbol);
  const double elapsed_us = gates * 1e6 / apd.rep_rate_hz;
  return !(elapsed_us < apd.dead_time_us);
}

double max_count_rate(const ApdParams& apd, double p_click) {
  if (!(p_click >= 0.0 && p_click <= 1.0)) {
    throw std::domain_error("max_count_rate: p_click must lie in [0, 1]");
  }
  const double offered = apd.rep_rate_hz * p_click;
  const double dead_time_s = apd.dead_time_us * 1e-6;
  if (std::isinf(dead_time_s)) return 0.0;
  return offered / (1.0 + offered * dead_time_s);
}

double dark_prob_from_rate(double dark_rate_hz, double gate_width_ns) {
  if (!(dark_rate_hz >= 0.0) || !(gate_width_ns > 0.0)) {
    throw std::domain_error("dark_prob_from_rate: need rate >= 0 and gate width > 0");
  }
  return -std::expm1(-dark_rate_hz * gate_width_ns * 1e-9);
}

}  // namespace qkdsim
