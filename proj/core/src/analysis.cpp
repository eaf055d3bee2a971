// Copyright 2026 The qkdsim Authors.
// SPDX-License-Identifier: Apache-2.0

#include "qkdsim/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <boost/math/distributions/normal.hpp>

#include "qkdsim/optics.hpp"
#include "qkdsim/photon_counting.hpp"

namespace qkdsim {

namespace {
bool in_unit(double x) { return x >= 0.0 && x <= 1.0; }
}  // namespace

double qber_theory_pc(double mu, double eta, double visibility, double p_dark) {
  if (!(mu >= 0.0) || !std::isfinite(mu) || !in_unit(eta) || !in_unit(visibility) ||
      !in_unit(p_dark)) {
    throw std::domain_error(
        "qber_theory_pc: need mu >= 0 and eta, visibility, p_dark in [0, 1]");
  }
  ApdParams apd;
  apd.quantum_efficiency = eta;
  apd.dark_prob_per_gate = p_dark;
  const double p_right = click_prob(mu * (1.0 + visibility) / 2.0, apd);
  const double p_wrong = click_prob(mu * (1.0 - visibility) / 2.0, apd);
  const double wrong_only = p_wrong * (1.0 - p_right);
  const double right_only = p_right * (1.0 - p_wrong);
  const double single = wrong_only + right_only;
  if (single == 0.0) return 0.5;
  return wrong_only / single;
}

double qber_theory_homodyne(double snr, double standardized_threshold) {
  if (!(snr >= 0.0) || !(standardized_threshold >= 0.0)) {
    throw std::domain_error("qber_theory_homodyne: need snr >= 0 and threshold >= 0");
  }
  if (standardized_threshold == 0.0) return gaussian_q(snr);
  const double wrong = gaussian_q(standardized_threshold + snr);
  const double right = gaussian_q(standardized_threshold - snr);
  if (wrong + right == 0.0) return 0.5;
  return wrong / (wrong + right);
}

double two_sided_z(double confidence) {
  if (!(confidence > 0.0 && confidence < 1.0)) {
    throw std::domain_error("two_sided_z: confidence must lie in (0, 1)");
  }
  const boost::math::normal_distribution<double> standard;
  return boost::math::quantile(standard, 0.5 + confidence / 2.0);
}

Interval wilson_interval(std::uint64_t errors, std::uint64_t trials, double confidence) {
  if (trials == 0 || errors > trials) {
    throw std::domain_error("wilson_interval: need trials >= 1 and errors <= trials");
  }
  const double z = two_sided_z(confidence);
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(errors) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double centre = (p + z2 / (2.0 * n)) / denom;
  const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
  // At the boundaries the interval touches 0 or 1 exactly.
  const double low = errors == 0 ? 0.0 : std::max(0.0, centre - half);
  const double high = errors == trials ? 1.0 : std::min(1.0, centre + half);
  return {low, high};
}

double compare(double predicted, std::uint64_t errors, std::uint64_t trials) {
  if (trials == 0) throw std::domain_error("compare: trials must be >= 1");
  const double observed = static_cast<double>(errors) / static_cast<double>(trials);
  const double deviation = observed - predicted;
  const double variance = predicted * (1.0 - predicted) / static_cast<double>(trials);
  if (variance <= 0.0) {
    if (deviation == 0.0) return 0.0;
    return deviation > 0.0 ? std::numeric_limits<double>::infinity()
                           : -std::numeric_limits<double>::infinity();
  }
  return deviation / std::sqrt(variance);
}

double predicted_qber(const RunConfig& config) {
  const double mu = apply_loss(config.mean_photons_per_bit, config.channel.loss_db);
  if (config.receiver == Receiver::PhotonCounting) {
    const double v = effective_visibility(config.visibility, config.channel.pol_angle, 1.0, 1.0);
    return qber_theory_pc(mu, config.apd.quantum_efficiency, v, config.apd.dark_prob_per_gate);
  }
  const HomodyneParams& hp = config.homodyne;
  const double overlap = mode_overlap(config.visibility, config.channel.pol_angle);
  const double residual_cm = hp.common_mode_sigma * std::pow(10.0, -hp.cmrr_db / 20.0);
  const double sigma = std::hypot(quadrature_sigma(hp), residual_cm);
  const double mean = std::abs(quadrature_mean(mu, 0.0, hp, overlap));
  return qber_theory_homodyne(mean / sigma, hp.decision_threshold / sigma);
}

TheoryPoint make_theory_point(double parameter_value, double predicted, const RunStats& stats,
                              double confidence) {
  TheoryPoint tp;
  tp.parameter_value = parameter_value;
  tp.predicted = predicted;
  if (stats.sifted == 0) {
    tp.observed = std::numeric_limits<double>::quiet_NaN();
    tp.ci_low = 0.0;
    tp.ci_high = 1.0;
    tp.z_score = std::numeric_limits<double>::quiet_NaN();
    return tp;
  }
  tp.observed = static_cast<double>(stats.errors) / static_cast<double>(stats.sifted);
  const Interval ci = wilson_interval(stats.errors, stats.sifted, confidence);
  tp.ci_low = ci.low;
  tp.ci_high = ci.high;
  tp.z_score = compare(predicted, stats.errors, stats.sifted);
  return tp;
}

}  // namespace qkdsim
