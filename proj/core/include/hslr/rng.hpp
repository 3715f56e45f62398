// Copyright 2026 the hslr authors
// SPDX-License-Identifier: Apache-2.0

#ifndef HSLR_RNG_HPP
#define HSLR_RNG_HPP

#include <cstdint>
#include <random>

#include "hslr/dense_matrix.hpp"

namespace hslr {

/// Seed for all randomized stages. Every random draw in the library is a
/// pure function of one of these, so equal seeds give bit-identical
/// results on any platform.
struct RngSeed {
  std::uint64_t value = 0;

  bool operator==(const RngSeed&) const = default;
};

/// Derives a child seed from (seed, index) with a splitmix64-style mix.
/// Used to give each node of a recursive compression its own independent
/// stream without coordinating a global counter.
RngSeed derive_seed(RngSeed seed, std::uint64_t index);

/// Standard-normal sampler with a pinned algorithm: mt19937_64 feeding an
/// explicit Box-Muller transform. std::normal_distribution is not used
/// because its output is implementation-defined; this sampler produces the
/// same stream on every standard library.
class GaussianSampler {
public:
  explicit GaussianSampler(RngSeed seed) : engine_(seed.value) {}

  float next();

private:
  double next_unit_open(); // uniform in (0, 1]

  std::mt19937_64 engine_;
  float cached_ = 0.0f;
  bool has_cached_ = false;
};

/// rows-by-cols matrix of i.i.d. standard normals, filled row by row from
/// a GaussianSampler seeded with `seed`.
DenseMatrix gaussian_matrix(std::size_t rows, std::size_t cols, RngSeed seed);

/// Deterministic uniform integer draws via rejection sampling on the raw
/// mt19937_64 stream (std::uniform_int_distribution is also
/// implementation-defined).
class RandomBits {
public:
  explicit RandomBits(RngSeed seed) : engine_(seed.value) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [0, bound). Requires bound > 0.
  std::uint64_t next_below(std::uint64_t bound);

private:
  std::mt19937_64 engine_;
};

} // namespace hslr

#endif // HSLR_RNG_HPP
