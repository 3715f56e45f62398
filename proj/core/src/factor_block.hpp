// Copyright 2026 the hslr authors
// SPDX-License-Identifier: Apache-2.0

// Off-diagonal block factorization shared by the hierarchical
// compressors. Both recursions must call exactly this routine with the
// same seeds for their p=0 outputs to coincide bit for bit.

#ifndef HSLR_FACTOR_BLOCK_HPP
#define HSLR_FACTOR_BLOCK_HPP

#include <algorithm>

#include "hslr/hss.hpp"
#include "hslr/low_rank.hpp"
#include "hslr/svd.hpp"

namespace hslr {

// Factors `block` at rank min(k, block min-dimension). The oversampling
// width is clamped too so the sketch never exceeds the block.
inline LowRankFactor factor_block(const DenseMatrix& block, std::size_t k,
                                  float eps, FactorMethod method,
                                  std::size_t oversample,
                                  std::size_t power_iters, RngSeed seed) {
  const std::size_t mn = std::min(block.rows(), block.cols());
  if (mn == 0) {
    return LowRankFactor{DenseMatrix(block.rows(), 0),
                         DenseMatrix(0, block.cols())};
  }
  const std::size_t k_eff = std::min(k, mn);
  if (method == FactorMethod::Svd) {
    return to_factor(truncated_svd(block, k_eff, eps));
  }
  const std::size_t q_eff = std::min(oversample, mn - k_eff);
  return to_factor(randomized_svd(block, k_eff, q_eff, power_iters, eps, seed));
}

} // namespace hslr

#endif // HSLR_FACTOR_BLOCK_HPP
