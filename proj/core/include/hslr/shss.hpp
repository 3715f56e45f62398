// Copyright 2026 the hslr authors
// SPDX-License-Identifier: Apache-2.0

#ifndef HSLR_SHSS_HPP
#define HSLR_SHSS_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "hslr/dense_matrix.hpp"
#include "hslr/hss.hpp"
#include "hslr/low_rank.hpp"
#include "hslr/op_count.hpp"
#include "hslr/permutation.hpp"
#include "hslr/rng.hpp"
#include "hslr/sparse_matrix.hpp"

namespace hslr {

/// How each block chooses its spikes: a fixed percentage of the block's
/// own entry count (default), or every entry above a magnitude cutoff.
enum class SpikeRule : std::uint8_t {
  Percent = 0,
  Threshold = 1,
};

struct ShssConfig {
  double p = 0.0;               // spike percentage per block (Percent rule)
  float spike_threshold = 0.0f; // magnitude cutoff (Threshold rule)
  SpikeRule spike_rule = SpikeRule::Percent;
  std::size_t k = 1;            // outer rank; halved per level
  std::size_t depth = 1;
  float eps = 1e-6f;            // singular-value drop and RCM graph threshold
  bool use_rcm = false;
  FactorMethod method = FactorMethod::Rsvd;
  std::size_t oversample = 8;
  std::size_t power_iters = 2;
  RngSeed seed;

  bool operator==(const ShssConfig&) const = default;
};

/// Node of the sparse-plus-hierarchical tree. A leaf stores a dense
/// diagonal block unmodified. An internal node stores this level's spike
/// matrix in the block's own (pre-permutation) coordinates, the optional
/// reordering applied to the residual, the two off-diagonal factors of
/// the permuted residual, and two children. The residual handed to
/// permutation and factorization is exactly zero at every spike position.
struct ShssNode {
  DenseMatrix dense;
  SparseMatrix spikes;
  std::optional<Permutation> perm; // engaged only when RCM is enabled
  std::unique_ptr<ShssNode> child0;
  std::unique_ptr<ShssNode> child1;
  LowRankFactor off01;
  LowRankFactor off10;
  std::size_t dim = 0;
  std::size_t split = 0;
  std::size_t rank_at_level = 0;
  std::size_t depth = 0;

  bool is_leaf() const { return child0 == nullptr; }
};

struct ShssModel {
  ShssNode root;
  ShssConfig config;
  std::size_t dim = 0;

  std::size_t rows() const { return dim; }
  std::size_t cols() const { return dim; }
};

/// Recursive sparse-plus-hierarchical compression. At each internal node:
/// extract this block's spikes, optionally compute the Reverse
/// Cuthill-McKee order of the residual's pattern (thresholded at eps) and
/// reorder the residual symmetrically, factor the off-diagonal blocks of
/// the (permuted) residual at this node's rank, and recurse into the
/// diagonal blocks with rank max(1, floor(k/2)) and depth-1. Children at
/// depth 1 are dense leaves of the permuted residual's diagonal blocks.
///
/// The seed schedule matches hss_compress exactly (children take indices
/// 0 and 1, off-diagonal sketches indices 2 and 3), so p=0 without RCM
/// reproduces hss_compress bit for bit. Requires w square, k >= 1,
/// depth >= 1, n >= 2^depth, and p in [0, 100].
ShssModel shss_compress(const DenseMatrix& w, const ShssConfig& config);

/// Convenience overload with the remaining knobs at their defaults
/// (percent spike rule, randomized SVD, oversample 8, two power
/// iterations).
ShssModel shss_compress(const DenseMatrix& w, double p, std::size_t k,
                        std::size_t depth, float eps, bool use_rcm, RngSeed seed);

/// Structured matvec, per node: y_s = spikes * x on the unpermuted input;
/// gather x by the node's permutation; recurse into the children on the
/// two halves and add the cross terms off01*(upper product of lower half)
/// and off10*(of upper half); scatter the result back through the inverse
/// permutation; return y_s plus the scattered vector.
std::vector<float> shss_matvec(const ShssModel& m, std::span<const float> x,
                               OpCount* ops = nullptr);

/// Reconstructs the represented matrix by recursive densification,
/// inverse permutation at each level, and spike addition (test oracle).
DenseMatrix densify_shss(const ShssModel& m);

} // namespace hslr

#endif // HSLR_SHSS_HPP
