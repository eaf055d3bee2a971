// Copyright 2026 The qkdsim Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

#include "qkdsim/engine.hpp"
#include "qkdsim/homodyne.hpp"

namespace qkdsim {

/// One row of a Monte Carlo vs closed-form comparison.
struct TheoryPoint {
  double parameter_value = 0.0;
  double predicted = 0.0;
  double observed = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  double z_score = 0.0;
};

struct Interval {
  double low = 0.0;
  double high = 0.0;
};

/// Matched-basis QBER of the photon-counting receiver, conditioned on
/// exactly one detector clicking (double clicks are discarded, as in the
/// engine). mu is the total mean photon number at Bob's coupler.
///
/// Returns 0.5 when no single click can occur (mu = 0 with p_dark = 0, or
/// p_dark = 1). Throws std::domain_error outside
/// mu >= 0, eta, visibility, p_dark in [0, 1].
double qber_theory_pc(double mu, double eta, double visibility, double p_dark);

/// Homodyne QBER for a Gaussian receiver sample with |mean| / sigma = snr
/// and a dead zone of half-width threshold / sigma, conditioned on a
/// decision. threshold 0 reduces to Q(snr).
double qber_theory_homodyne(double snr, double standardized_threshold);

/// Wilson score interval. Throws std::domain_error unless
/// errors <= trials, trials >= 1 and confidence in (0, 1).
Interval wilson_interval(std::uint64_t errors, std::uint64_t trials, double confidence);

/// Two-sided standard-normal quantile for a central confidence level.
double two_sided_z(double confidence);

/// (errors/trials - predicted) / sqrt(predicted (1 - predicted) / trials).
/// A degenerate prediction (0 or 1) gives 0 on an exact match and +-inf
/// otherwise. Throws std::domain_error for trials == 0.
double compare(double predicted, std::uint64_t errors, std::uint64_t trials);

/// Closed-form QBER for a run configuration, ignoring phase drift and
/// modulator noise.
double predicted_qber(const RunConfig& config);

/// Fills a TheoryPoint from the run's error counts.
TheoryPoint make_theory_point(double parameter_value, double predicted, const RunStats& stats,
                              double confidence = 0.95);

}  // namespace qkdsim
