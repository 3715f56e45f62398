// Copyright 2026 the hslr authors
// SPDX-License-Identifier: Apache-2.0

#include "hslr/hss.hpp"

#include <string>

#include "factor_block.hpp"
#include "hslr/errors.hpp"

namespace hslr {

namespace {

void check_square_input(const DenseMatrix& a, std::size_t k) {
  if (!a.is_square() || a.rows() == 0) {
    throw DimensionError("hierarchical compression requires a square matrix");
  }
  if (k < 1) {
    throw ParamError("rank must be at least 1");
  }
}

HssNode build_node(const DenseMatrix& block, float eps, std::size_t k,
                   std::size_t depth, FactorMethod method, std::size_t oversample,
                   std::size_t power_iters, RngSeed seed) {
  HssNode node;
  node.dim = block.rows();
  node.rank_at_level = k;
  node.depth = depth;
  if (depth == 0) {
    node.dense = block;
    return node;
  }
  const std::size_t n = node.dim;
  const std::size_t s = split_point(n);
  node.split = s;
  node.off01 = factor_block(block.block(0, s, s, n - s), k, eps, method,
                            oversample, power_iters, derive_seed(seed, 2));
  node.off10 = factor_block(block.block(s, 0, n - s, s), k, eps, method,
                            oversample, power_iters, derive_seed(seed, 3));
  const std::size_t child_k = std::max<std::size_t>(1, k / 2);
  node.child0 = std::make_unique<HssNode>(
      build_node(block.block(0, 0, s, s), eps, child_k, depth - 1, method,
                 oversample, power_iters, derive_seed(seed, 0)));
  node.child1 = std::make_unique<HssNode>(
      build_node(block.block(s, s, n - s, n - s), eps, child_k, depth - 1,
                 method, oversample, power_iters, derive_seed(seed, 1)));
  return node;
}

std::vector<float> node_matvec(const HssNode& node, std::span<const float> x,
                               OpCount* ops) {
  if (node.is_leaf()) {
    return matvec(node.dense, x, ops);
  }
  const std::size_t s = node.split;
  const auto x0 = x.subspan(0, s);
  const auto x1 = x.subspan(s);
  std::vector<float> y0 = node_matvec(*node.child0, x0, ops);
  const std::vector<float> cross0 = apply(node.off01, x1, ops);
  for (std::size_t i = 0; i < y0.size(); ++i) y0[i] += cross0[i];
  std::vector<float> y1 = node_matvec(*node.child1, x1, ops);
  const std::vector<float> cross1 = apply(node.off10, x0, ops);
  for (std::size_t i = 0; i < y1.size(); ++i) y1[i] += cross1[i];
  y0.insert(y0.end(), y1.begin(), y1.end());
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

DenseMatrix node_densify(const HssNode& node) {
  if (node.is_leaf()) {
    return node.dense;
  }
  DenseMatrix out(node.dim, node.dim);
  const std::size_t s = node.split;
  paste(out, node_densify(*node.child0), 0, 0);
  paste(out, node_densify(*node.child1), s, s);
  paste(out, densify(node.off01), 0, s);
  paste(out, densify(node.off10), s, 0);
  return out;
}

} // namespace

TwoLevelBlocks two_level_compress(const DenseMatrix& a, float eps, std::size_t k,
                                  FactorMethod method, std::size_t oversample,
                                  std::size_t power_iters, RngSeed seed) {
  check_square_input(a, k);
  if (a.rows() < 2) {
    throw ParamError("two-level compression needs a matrix of dimension >= 2");
  }
  require_finite(a, "compression input");
  const std::size_t n = a.rows();
  const std::size_t s = split_point(n);
  TwoLevelBlocks out;
  out.split = s;
  out.d0 = a.block(0, 0, s, s);
  out.d1 = a.block(s, s, n - s, n - s);
  out.off01 = factor_block(a.block(0, s, s, n - s), k, eps, method, oversample,
                           power_iters, derive_seed(seed, 2));
  out.off10 = factor_block(a.block(s, 0, n - s, s), k, eps, method, oversample,
                           power_iters, derive_seed(seed, 3));
  return out;
}

HssTree hss_compress(const DenseMatrix& a, float eps, std::size_t k,
                     std::size_t depth, FactorMethod method,
                     std::size_t oversample, std::size_t power_iters,
                     RngSeed seed) {
  check_square_input(a, k);
  if (depth < 1) {
    throw ParamError("depth must be at least 1");
  }
  if (depth >= 64 || a.rows() < (std::size_t{1} << depth)) {
    throw ParamError("depth exceeds matrix size: need n >= 2^depth, have depth = " +
                     std::to_string(depth) + ", n = " + std::to_string(a.rows()));
  }
  require_finite(a, "compression input");
  HssTree tree;
  tree.dim = a.rows();
  tree.depth = depth;
  tree.rank = k;
  tree.eps = eps;
  tree.root = build_node(a, eps, k, depth, method, oversample, power_iters, seed);
  return tree;
}

std::vector<float> hss_matvec(const HssTree& t, std::span<const float> x,
                              OpCount* ops) {
  if (x.size() != t.dim) {
    throw DimensionError("matvec: vector length " + std::to_string(x.size()) +
                         " does not match dimension " + std::to_string(t.dim));
  }
  return node_matvec(t.root, x, ops);
}

DenseMatrix densify(const HssTree& t) { return node_densify(t.root); }

DenseMatrix densify(const TwoLevelBlocks& b) {
  const std::size_t n = b.d0.rows() + b.d1.rows();
  DenseMatrix out(n, n);
  const std::size_t s = b.split;
  paste(out, b.d0, 0, 0);
  paste(out, b.d1, s, s);
  paste(out, densify(b.off01), 0, s);
  paste(out, densify(b.off10), s, 0);
  return out;
}

} // namespace hslr
