// Copyright 2026 The qkdsim Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <limits>

#include "qkdsim/rng.hpp"

namespace qkdsim {

/// Optical state of one signal + reference pulse pair at Bob's coupler.
struct PulsePair {
  double signal_mean_photons = 0.0;
  double ref_mean_photons = 0.0;
  double relative_phase = 0.0;
  double pol_angle = 0.0;  // [0, pi/2]
};

struct ChannelParams {
  double loss_db = 0.0;
  double drift_sigma = 0.0;      // rad per symbol, random-walk step
  double pol_angle = 0.0;        // rad, key vs reference polarization
  double phase_mod_sigma = 0.0;  // rad, modulator deviation
};

struct DriftState {
  double phase_offset = 0.0;
};

struct VisibilityParams {
  double intrinsic_visibility = 1.0;
  double extinction_ratio_db = std::numeric_limits<double>::infinity();
};

struct PortMeans {
  double m1 = 0.0;
  double m2 = 0.0;
};

/// mean_photons * 10^(-loss_db/10). Throws std::domain_error on negative input.
double apply_loss(double mean_photons, double loss_db);

/// One Wiener step: offset + N(0, drift_sigma^2).
DriftState advance_drift(DriftState state, double drift_sigma, Rng& rng);

/// Product of the independent contrast factors: intrinsic visibility,
/// polarization overlap |cos(pol)|, intensity balance
/// 2 sqrt(mu_s mu_r)/(mu_s + mu_r), and extinction leakage
/// 1 - 10^(-ER/10). Clamped to [0, 1].
double effective_visibility(const VisibilityParams& vp, double pol_angle, double mu_s,
                            double mu_r);

/// The same composition without the intensity-balance factor; this is the
/// mode overlap seen by a receiver whose reference is much stronger than
/// the signal.
double mode_overlap(const VisibilityParams& vp, double pol_angle);

/// Mean photon numbers at the two output ports of Bob's coupler.
/// m1 + m2 == mu_s + mu_r. Throws std::domain_error if V is outside [0, 1].
PortMeans port_means(double mu_s, double mu_r, double delta_phi, double visibility);

inline PortMeans port_means(const PulsePair& p, double visibility) {
  return port_means(p.signal_mean_photons, p.ref_mean_photons, p.relative_phase, visibility);
}

/// Wraps to the half-open interval [0, 2 pi).
double wrap_phase(double phase) noexcept;

/// nominal + N(0, sigma^2) + drift offset, wrapped.
double perturb_phase(double nominal, double phase_mod_sigma, const DriftState& drift, Rng& rng);

}  // namespace qkdsim
