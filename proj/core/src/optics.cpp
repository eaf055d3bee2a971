// Copyright 2026 The qkdsim Authors.
// SPDX-License-Identifier: Apache-2.0

#include "qkdsim/optics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qkdsim {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double extinction_factor(double extinction_ratio_db) {
  if (std::isinf(extinction_ratio_db)) return 1.0;
  return 1.0 - std::pow(10.0, -extinction_ratio_db / 10.0);
}
}  // namespace

double apply_loss(double mean_photons, double loss_db) {
  if (!(mean_photons >= 0.0) || !(loss_db >= 0.0)) {
    throw std::domain_error("apply_loss: mean photons and loss must be nonnegative");
  }
  return mean_photons * std::pow(10.0, -loss_db / 10.0);
}

DriftState advance_drift(DriftState state, double drift_sigma, Rng& rng) {
  state.phase_offset += normal_draw(rng, drift_sigma);
  return state;
}

double mode_overlap(const VisibilityParams& vp, double pol_angle) {
  const double v = vp.intrinsic_visibility * std::abs(std::cos(pol_angle)) *
                   extinction_factor(vp.extinction_ratio_db);
  return std::clamp(v, 0.0, 1.0);
}

double effective_visibility(const VisibilityParams& vp, double pol_angle, double mu_s,
                            double mu_r) {
  if (!(mu_s >= 0.0) || !(mu_r >= 0.0) || mu_s + mu_r == 0.0) {
    throw std::domain_error("effective_visibility: need mu_s, mu_r >= 0, not both zero");
  }
  // sqrt(x * x) == x in IEEE arithmetic, so mu_s == mu_r gives exactly 1.
  const double balance = 2.0 * std::sqrt(mu_s * mu_r) / (mu_s + mu_r);
  return std::clamp(mode_overlap(vp, pol_angle) * balance, 0.0, 1.0);
}

PortMeans port_means(double mu_s, double mu_r, double delta_phi, double visibility) {
  if (!(visibility >= 0.0 && visibility <= 1.0)) {
    throw std::domain_error("port_means: visibility must lie in [0, 1]");
  }
  if (!(mu_s >= 0.0) || !(mu_r >= 0.0)) {
    throw std::domain_error("port_means: mean photon numbers must be nonnegative");
  }
  const double total = mu_s + mu_r;
  const double half = total / 2.0;
  const double beat = std::sqrt(mu_s * mu_r) * visibility * std::cos(delta_phi);
  // Cauchy-Schwarz keeps both ports nonnegative up to rounding; m2 is taken
  // as the complement so the sum is exact.
  const double m1 = std::clamp(half + beat, 0.0, total);
  return {m1, total - m1};
}

double wrap_phase(double phase) noexcept {
  double w = std::fmod(phase, kTwoPi);
  if (w < 0.0) w += kTwoPi;
  if (w >= kTwoPi) w = 0.0;
  return w;
}

double perturb_phase(double nominal, double phase_mod_sigma, const DriftState& drift,
                     Rng& rng) {
  return wrap_phase(nominal + normal_draw(rng, phase_mod_sigma) + drift.phase_offset);
}

}  // namespace qkdsim
