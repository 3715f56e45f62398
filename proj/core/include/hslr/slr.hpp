// Copyright 2026 the hslr authors
// SPDX-License-Identifier: Apache-2.0

#ifndef HSLR_SLR_HPP
#define HSLR_SLR_HPP

#include <cstddef>
#include <cstdint>

#include "hslr/dense_matrix.hpp"
#include "hslr/low_rank.hpp"
#include "hslr/rng.hpp"
#include "hslr/sparse_matrix.hpp"
#include "hslr/svd.hpp"

namespace hslr {

/// Result of pulling large-magnitude entries (spikes) out of a matrix:
/// spikes holds the extracted values at their original coordinates and
/// residual is the input with those positions zeroed, so
/// input == densify(spikes) + residual exactly.
struct SpikeSplit {
  SparseMatrix spikes;
  DenseMatrix residual;
};

/// Selects the round(p/100 * m*n) entries of largest absolute value,
/// globally over the matrix. Ties in magnitude are broken by (row, col)
/// ascending so the selection is total-ordered and deterministic; the
/// spike matrix stores the original values exactly. Selected entries that
/// are exactly zero are dropped from the sparse form (zeroing them is a
/// no-op either way). p must lie in [0, 100].
SpikeSplit extract_top_p(const DenseMatrix& w, double p);

/// Selects every entry with |value| >= threshold; threshold must be
/// positive and finite.
SpikeSplit extract_above(const DenseMatrix& w, float threshold);

enum class SlrMethod : std::uint8_t {
  Ssvd = 0,  // exact SVD on the residual
  Srsvd = 1, // randomized SVD on the residual
};

struct SlrParams {
  double p = 0.0;
  std::size_t k = 0;
  std::size_t q = 0;           // oversampling, randomized only
  std::size_t power_iters = 0; // randomized only
  float eps = 1e-6f;
  RngSeed seed;                // randomized only

  bool operator==(const SlrParams&) const = default;
};

/// Sparse-plus-low-rank model of one matrix: W ~ spikes + u * r. The
/// method and parameters that produced it ride along for reporting and
/// serialization.
struct SparseLowRank {
  SparseMatrix spikes;
  LowRankFactor factor;
  SlrMethod method = SlrMethod::Ssvd;
  SlrParams params;

  std::size_t rows() const { return spikes.rows(); }
  std::size_t cols() const { return spikes.cols(); }

  bool operator==(const SparseLowRank&) const = default;
};

/// Spikes out, then an exact truncated SVD of the residual.
SparseLowRank sparse_plus_svd(const DenseMatrix& w, double p, std::size_t k,
                              float eps = 1e-6f);

/// Spikes out, then a randomized SVD of the residual.
SparseLowRank sparse_plus_rsvd(const DenseMatrix& w, double p, std::size_t k,
                               std::size_t q, std::size_t power_iters, float eps,
                               RngSeed seed);

/// y = spikes*x + u*(r*x); the low-rank product is never densified.
std::vector<float> slr_matvec(const SparseLowRank& m, std::span<const float> x,
                              OpCount* ops = nullptr);

/// densify(spikes) + u*r, accumulated in double per entry.
DenseMatrix densify(const SparseLowRank& m);

} // namespace hslr

#endif // HSLR_SLR_HPP
