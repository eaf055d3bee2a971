// Copyright 2026 The qkdsim Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <random>

namespace qkdsim {

using Rng = std::mt19937_64;

/// Independent sub-streams of one run. Each source of randomness draws only
/// from its own stream, so enabling a noise source never shifts the draws of
/// another.
enum class Stream : std::uint32_t {
  Alice = 1,     // basis and bit choices
  Bob = 2,       // basis choices
  Optics = 3,    // modulator error and interferometer drift
  Detector = 4,  // clicks, quadrature shot noise, common-mode noise
};

Rng make_stream(std::uint64_t seed, Stream stream);

/// Seed of the i-th run of a sweep. Index 0 returns the base seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept;

/// Standard normal scaled by sigma. sigma == 0 returns 0 without drawing.
double normal_draw(Rng& rng, double sigma);

bool coin(Rng& rng);

}  // namespace qkdsim
