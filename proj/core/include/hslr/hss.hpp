// Copyright 2026 the hslr authors
// SPDX-License-Identifier: Apache-2.0

#ifndef HSLR_HSS_HPP
#define HSLR_HSS_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "hslr/dense_matrix.hpp"
#include "hslr/low_rank.hpp"
#include "hslr/op_count.hpp"
#include "hslr/rng.hpp"

namespace hslr {

/// Which factorization backs off-diagonal blocks: randomized SVD is the
/// default; exact SVD exists for oracle comparisons.
enum class FactorMethod : std::uint8_t {
  Svd = 0,
  Rsvd = 1,
};

/// First block boundary of an n-sized split: the leading block takes
/// ceil(n/2) indices, the trailing block the rest.
inline std::size_t split_point(std::size_t n) { return (n + 1) / 2; }

/// One level of block compression of a square matrix: diagonal blocks
/// copied verbatim, off-diagonal blocks factored at (clamped) rank k.
struct TwoLevelBlocks {
  DenseMatrix d0; // split x split
  DenseMatrix d1; // (n-split) x (n-split)
  LowRankFactor off01;
  LowRankFactor off10;
  std::size_t split = 0;
};

/// Node of a hierarchical tree: a leaf carries a dense diagonal block,
/// an internal node carries two off-diagonal factors and two children.
/// Every node records the rank the halving schedule assigned it
/// (rank_at_level, before any clamp to block dimensions) and the number
/// of factorization levels below it (depth, zero at leaves).
struct HssNode {
  DenseMatrix dense;
  std::unique_ptr<HssNode> child0;
  std::unique_ptr<HssNode> child1;
  LowRankFactor off01;
  LowRankFactor off10;
  std::size_t dim = 0;
  std::size_t split = 0;
  std::size_t rank_at_level = 0;
  std::size_t depth = 0;

  bool is_leaf() const { return child0 == nullptr; }
};

struct HssTree {
  HssNode root;
  std::size_t dim = 0;
  std::size_t depth = 0;
  std::size_t rank = 0;
  float eps = 0.0f;
};

/// Splits a square matrix (n >= 2) at ceil(n/2), copies the diagonal
/// blocks, and factors each off-diagonal block at rank
/// min(k, block min-dimension); singular values <= eps are dropped.
/// Sketch seeds for the two off-diagonal blocks are derive_seed(seed, 2)
/// and derive_seed(seed, 3), shared with the recursive compressors so a
/// depth-1 tree reproduces this result exactly.
TwoLevelBlocks two_level_compress(const DenseMatrix& a, float eps, std::size_t k,
                                  FactorMethod method = FactorMethod::Rsvd,
                                  std::size_t oversample = 8,
                                  std::size_t power_iters = 2, RngSeed seed = {});

/// Recursive hierarchical compression: applies a two-level split at this
/// node with rank k, then recurses into the diagonal blocks with rank
/// max(1, floor(k/2)) and depth-1; at depth 1 the children are dense
/// leaves. Requires a square, k >= 1, depth >= 1, and n >= 2^depth so
/// every leaf is nonempty.
///
/// Seed schedule, fixed so results are independent of traversal order:
/// a node with seed s uses derive_seed(s, 0) and derive_seed(s, 1) for
/// its children and derive_seed(s, 2) and derive_seed(s, 3) for the
/// off01 and off10 sketches.
HssTree hss_compress(const DenseMatrix& a, float eps, std::size_t k,
                     std::size_t depth, FactorMethod method = FactorMethod::Rsvd,
                     std::size_t oversample = 8, std::size_t power_iters = 2,
                     RngSeed seed = {});

/// Recursive structured matvec: leaves multiply dense, internal nodes
/// combine child products with the cross terms off01*(x upper half) and
/// off10*(x lower half). Off-diagonal blocks are never densified.
std::vector<float> hss_matvec(const HssTree& t, std::span<const float> x,
                              OpCount* ops = nullptr);

/// Reconstructs the represented matrix (test oracle).
DenseMatrix densify(const HssTree& t);
DenseMatrix densify(const TwoLevelBlocks& b);

} // namespace hslr

#endif // HSLR_HSS_HPP
