// Copyright 2026 the hslr authors
// SPDX-License-Identifier: Apache-2.0

#include "hslr/shss.hpp"

#include <string>
#include <utility>

#include "factor_block.hpp"
#include "hslr/errors.hpp"
#include "hslr/rcm.hpp"
#include "hslr/slr.hpp"

namespace hslr {

namespace {

SpikeSplit take_spikes(const DenseMatrix& block, const ShssConfig& config) {
  if (config.spike_rule == SpikeRule::Threshold) {
    return extract_above(block, config.spike_threshold);
  }
  return extract_top_p(block, config.p);
}

ShssNode build_node(const DenseMatrix& block, const ShssConfig& config,
                    std::size_t k, std::size_t depth, RngSeed seed) {
  ShssNode node;
  node.dim = block.rows();
  node.rank_at_level = k;
  node.depth = depth;
  if (depth == 0) {
    node.dense = block;
    return node;
  }

  SpikeSplit split = take_spikes(block, config);
  node.spikes = std::move(split.spikes);
  DenseMatrix residual = std::move(split.residual);
  if (config.use_rcm) {
    Permutation perm = rcm_order(build_adjacency(residual, config.eps));
    residual = apply_sym_perm(residual, perm);
    node.perm = std::move(perm);
  }

  const std::size_t n = node.dim;
  const std::size_t s = split_point(n);
  node.split = s;
  node.off01 = factor_block(residual.block(0, s, s, n - s), k, config.eps,
                            config.method, config.oversample, config.power_iters,
                            derive_seed(seed, 2));
  node.off10 = factor_block(residual.block(s, 0, n - s, s), k, config.eps,
                            config.method, config.oversample, config.power_iters,
                            derive_seed(seed, 3));
  const std::size_t child_k = std::max<std::size_t>(1, k / 2);
  node.child0 = std::make_unique<ShssNode>(
      build_node(residual.block(0, 0, s, s), config, child_k, depth - 1,
                 derive_seed(seed, 0)));
  node.child1 = std::make_unique<ShssNode>(
      build_node(residual.block(s, s, n - s, n - s), config, child_k, depth - 1,
                 derive_seed(seed, 1)));
  return node;
}

std::vector<float> node_matvec(const ShssNode& node, std::span<const float> x,
                               OpCount* ops) {
  if (node.is_leaf()) {
    return matvec(node.dense, x, ops);
  }

  // Step 1: multiply this level's spikes by the unpermuted input.
  std::vector<float> y_spikes;
  const bool have_spikes = node.spikes.nnz() > 0;
  if (have_spikes) y_spikes = sparse_matvec(node.spikes, x, ops);

  // Step 2: gather the input into the permuted ordering.
  std::vector<float> gathered;
  std::span<const float> xp = x;
  if (node.perm) {
    gathered = apply_permutation(*node.perm, x);
    xp = gathered;
  }

  // Step 3: recursive block multiply with the cross terms.
  const std::size_t s = node.split;
  const auto x0 = xp.subspan(0, s);
  const auto x1 = xp.subspan(s);
  std::vector<float> y0 = node_matvec(*node.child0, x0, ops);
  const std::vector<float> cross0 = apply(node.off01, x1, ops);
  for (std::size_t i = 0; i < y0.size(); ++i) y0[i] += cross0[i];
  std::vector<float> y1 = node_matvec(*node.child1, x1, ops);
  const std::vector<float> cross1 = apply(node.off10, x0, ops);
  for (std::size_t i = 0; i < y1.size(); ++i) y1[i] += cross1[i];
  y0.insert(y0.end(), y1.begin(), y1.end());

  // Step 4: scatter back to the original ordering.
  if (node.perm) {
    y0 = apply_inverse_permutation(*node.perm, y0);
  }

  // Step 5: add the spike product.
  if (have_spikes) {
    for (std::size_t i = 0; i < y0.size(); ++i) y0[i] += y_spikes[i];
  }
  return y0;
}

void paste(DenseMatrix& dst, const DenseMatrix& src, std::size_t row0,
           std::size_t col0) {
  for (std::size_t i = 0; i < src.rows(); ++i) {
    for (std::size_t j = 0; j < src.cols(); ++j) {
      dst(row0 + i, col0 + j) = src(i, j);
    }
  }
}

DenseMatrix node_densify(const ShssNode& node) {
  if (node.is_leaf()) {
    return node.dense;
  }
  DenseMatrix assembled(node.dim, node.dim);
  const std::size_t s = node.split;
  paste(assembled, node_densify(*node.child0), 0, 0);
  paste(assembled, node_densify(*node.child1), s, s);
  paste(assembled, densify(node.off01), 0, s);
  paste(assembled, densify(node.off10), s, 0);

  if (node.perm) {
    // Undo the symmetric reorder: the assembled matrix approximates the
    // permuted residual, so entry (i, j) belongs at (forward[i], forward[j]).
    const auto fwd = node.perm->forward();
    DenseMatrix restored(node.dim, node.dim);
    for (std::size_t i = 0; i < node.dim; ++i) {
      for (std::size_t j = 0; j < node.dim; ++j) {
        restored(fwd[i], fwd[j]) = assembled(i, j);
      }
    }
    assembled = std::move(restored);
  }

  for (const SparseEntry& e : node.spikes.entries()) {
    assembled(e.row, e.col) += e.value;
  }
  return assembled;
}

} // namespace

ShssModel shss_compress(const DenseMatrix& w, const ShssConfig& config) {
  if (!w.is_square() || w.rows() == 0) {
    throw DimensionError("hierarchical compression requires a square matrix");
  }
  if (config.k < 1) {
    throw ParamError("rank must be at least 1");
  }
  if (config.depth < 1) {
    throw ParamError("depth must be at least 1");
  }
  if (config.depth >= 64 || w.rows() < (std::size_t{1} << config.depth)) {
    throw ParamError("depth exceeds matrix size: need n >= 2^depth, have depth = " +
                     std::to_string(config.depth) + ", n = " +
                     std::to_string(w.rows()));
  }
  if (config.spike_rule == SpikeRule::Percent &&
      !(config.p >= 0.0 && config.p <= 100.0)) {
    throw ParamError("spike percentage must lie in [0, 100]");
  }
  require_finite(w, "compression input");

  ShssModel model;
  model.config = config;
  model.dim = w.rows();
  model.root = build_node(w, config, config.k, config.depth, config.seed);
  return model;
}

ShssModel shss_compress(const DenseMatrix& w, double p, std::size_t k,
                        std::size_t depth, float eps, bool use_rcm, RngSeed seed) {
  ShssConfig config;
  config.p = p;
  config.k = k;
  config.depth = depth;
  config.eps = eps;
  config.use_rcm = use_rcm;
  config.seed = seed;
  return shss_compress(w, config);
}

std::vector<float> shss_matvec(const ShssModel& m, std::span<const float> x,
                               OpCount* ops) {
  if (x.size() != m.dim) {
    throw DimensionError("matvec: vector length " + std::to_string(x.size()) +
                         " does not match dimension " + std::to_string(m.dim));
  }
  return node_matvec(m.root, x, ops);
}

DenseMatrix densify_shss(const ShssModel& m) { return node_densify(m.root); }

} // namespace hslr
