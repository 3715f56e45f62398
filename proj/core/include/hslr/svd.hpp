// Copyright 2026 the hslr authors
// SPDX-License-Identifier: Apache-2.0

#ifndef HSLR_SVD_HPP
#define HSLR_SVD_HPP

#include <cstddef>
#include <vector>

#include "hslr/dense_matrix.hpp"
#include "hslr/low_rank.hpp"
#include "hslr/rng.hpp"

namespace hslr {

/// Rank-k truncated SVD: A ~ u * diag(sigma) * vt with u m-by-k
/// (orthonormal columns), sigma length k non-increasing, vt k-by-n
/// (orthonormal rows). Singular values at or below the drop tolerance are
/// zeroed in place; achieved_rank counts the values that survive, so it
/// can be smaller than k for numerically rank-deficient inputs.
struct SvdResult {
  DenseMatrix u;
  std::vector<float> sigma;
  DenseMatrix vt;
  std::size_t achieved_rank = 0;

  bool operator==(const SvdResult&) const = default;
};

/// Exact truncated SVD via a full factorization. Requires
/// 1 <= k <= min(m, n) and eps >= 0; the reconstruction over the kept
/// triplets is the Frobenius-optimal rank-k approximation.
SvdResult truncated_svd(const DenseMatrix& a, std::size_t k, float eps = 1e-6f);

/// Randomized truncated SVD: Gaussian sketch Y = A * Omega with Omega
/// n-by-(k+q), each power iteration applies A^T then A with
/// re-orthonormalization after every product, then an exact SVD of the
/// projected B = Q^T * A is lifted back through Q. Deterministic given
/// the seed. Requires k >= 1 and k + oversample <= min(m, n).
SvdResult randomized_svd(const DenseMatrix& a, std::size_t k,
                         std::size_t oversample, std::size_t power_iters,
                         float eps, RngSeed seed);

/// Folds the surviving singular values into the left factor: keeps the
/// first achieved_rank columns, u' = u_kept * diag(sigma_kept), r = the
/// kept rows of vt. Shapes stay m-by-ar and ar-by-n with ar possibly 0.
LowRankFactor to_factor(const SvdResult& svd);

} // namespace hslr

#endif // HSLR_SVD_HPP
