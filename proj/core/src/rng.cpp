// Copyright 2026 The qkdsim Authors.
// SPDX-License-Identifier: Apache-2.0

#include "qkdsim/rng.hpp"

namespace qkdsim {

Rng make_stream(std::uint64_t seed, Stream stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed & 0xffffffffu),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream)};
  return Rng(seq);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept {
  return seed + index * 0x9E3779B97F4A7C15ull;
}

double normal_draw(Rng& rng, double sigma) {
  if (sigma == 0.0) return 0.0;
  std::normal_distribution<double> dist(0.0, sigma);
  return dist(rng);
}

bool coin(Rng& rng) { return (rng() >> 63) != 0; }

}  // namespace qkdsim
