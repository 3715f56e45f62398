// Copyright 2026 the hslr authors
// SPDX-License-Identifier: Apache-2.0

#include "hslr/rng.hpp"

#include <cmath>
#include <numbers>

#include "hslr/errors.hpp"

namespace hslr {

namespace {

// splitmix64 finalizer. Strong enough to decorrelate sequential indices
// and cheap enough to call per node.
std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

} // namespace

RngSeed derive_seed(RngSeed seed, std::uint64_t index) {
  return RngSeed{mix64(seed.value ^ mix64(index))};
}

double GaussianSampler::next_unit_open() {
  // 53 high bits -> [0, 1), flipped to (0, 1] so log() stays finite.
  const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  return 1.0 - u;
}

float GaussianSampler::next() {
  if (has_cached_) {
    has_cached_ = false;
    return cached_;
  }
  // Box-Muller on two explicit uniforms. std::normal_distribution would be
  // implementation-defined; this transform is pinned by construction.
  const double u1 = next_unit_open();
  const double u2 = next_unit_open();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  cached_ = static_cast<float>(radius * std::sin(angle));
  has_cached_ = true;
  return static_cast<float>(radius * std::cos(angle));
}

DenseMatrix gaussian_matrix(std::size_t rows, std::size_t cols, RngSeed seed) {
  if (rows == 0 || cols == 0) {
    throw ParamError("gaussian_matrix requires positive dimensions");
  }
  GaussianSampler sampler(seed);
  DenseMatrix out(rows, cols);
  for (float& v : out.values()) v = sampler.next();
  return out;
}

std::uint64_t RandomBits::next_below(std::uint64_t bound) {
  if (bound == 0) throw ParamError("next_below requires a positive bound");
  // Rejection sampling for an unbiased draw.
  const std::uint64_t threshold = (~bound + 1) % bound; // (2^64 - bound) % bound
  for (;;) {
    const std::uint64_t x = engine_();
    if (x >= threshold) return x % bound;
  }
}

} // namespace hslr
