// Copyright 2026 the hslr authors
// SPDX-License-Identifier: Apache-2.0

#include "hslr/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hslr/errors.hpp"

namespace hslr {

namespace {

constexpr double kZeroNorm = 1e-12;

StorageReport finish(std::uint64_t dense, std::uint64_t values,
                     std::uint64_t indices) {
  StorageReport r;
  r.dense_params = dense;
  r.stored_values = values;
  r.index_overhead = indices;
  r.compression_ratio =
      values == 0 ? 0.0
                  : static_cast<double>(dense) / static_cast<double>(values);
  return r;
}

void count_node(const HssNode& node, std::uint64_t& values) {
  if (node.is_leaf()) {
    values += node.dense.size();
    return;
  }
  values += node.off01.u.size() + node.off01.r.size();
  values += node.off10.u.size() + node.off10.r.size();
  count_node(*node.child0, values);
  count_node(*node.child1, values);
}

void count_node(const ShssNode& node, std::uint64_t& values,
                std::uint64_t& indices) {
  if (node.is_leaf()) {
    values += node.dense.size();
    return;
  }
  values += node.spikes.nnz();
  indices += 2 * node.spikes.nnz();
  if (node.perm) indices += node.perm->size();
  values += node.off01.u.size() + node.off01.r.size();
  values += node.off10.u.size() + node.off10.r.size();
  count_node(*node.child0, values, indices);
  count_node(*node.child1, values, indices);
}

} // namespace

StorageReport storage_count(const LowRankFactor& f) {
  const std::uint64_t dense =
      static_cast<std::uint64_t>(f.out_rows()) * f.in_cols();
  return finish(dense, f.u.size() + f.r.size(), 0);
}

StorageReport storage_count(const SparseLowRank& m) {
  const std::uint64_t dense = static_cast<std::uint64_t>(m.rows()) * m.cols();
  const std::uint64_t values =
      m.factor.u.size() + m.factor.r.size() + m.spikes.nnz();
  return finish(dense, values, 2 * m.spikes.nnz());
}

StorageReport storage_count(const HssTree& t) {
  std::uint64_t values = 0;
  count_node(t.root, values);
  const std::uint64_t dense = static_cast<std::uint64_t>(t.dim) * t.dim;
  return finish(dense, values, 0);
}

StorageReport storage_count(const ShssModel& m) {
  std::uint64_t values = 0;
  std::uint64_t indices = 0;
  count_node(m.root, values, indices);
  const std::uint64_t dense = static_cast<std::uint64_t>(m.dim) * m.dim;
  return finish(dense, values, indices);
}

ErrorReport error_report(const DenseMatrix& w, const DenseMatrix& approx) {
  if (w.rows() != approx.rows() || w.cols() != approx.cols()) {
    throw DimensionError("error report shapes disagree: " +
                         std::to_string(w.rows()) + "x" +
                         std::to_string(w.cols()) + " vs " +
                         std::to_string(approx.rows()) + "x" +
                         std::to_string(approx.cols()));
  }
  double sum_sq = 0.0;
  double w_sq = 0.0;
  double worst = 0.0;
  const float* wv = w.data();
  const float* av = approx.data();
  for (std::size_t i = 0; i < w.size(); ++i) {
    const double d =
        static_cast<double>(wv[i]) - static_cast<double>(av[i]);
    sum_sq += d * d;
    w_sq += static_cast<double>(wv[i]) * static_cast<double>(wv[i]);
    worst = std::max(worst, std::fabs(d));
  }
  ErrorReport r;
  r.frobenius_abs = std::sqrt(sum_sq);
  r.max_abs = worst;
  const double w_norm = std::sqrt(w_sq);
  if (w_norm < kZeroNorm) {
    r.frobenius_rel = r.frobenius_abs;
    r.rel_is_abs = true;
  } else {
    r.frobenius_rel = r.frobenius_abs / w_norm;
  }
  return r;
}

ErrorReport error_report(const DenseMatrix& w, const LowRankFactor& f) {
  return error_report(w, densify(f));
}

ErrorReport error_report(const DenseMatrix& w, const SparseLowRank& m) {
  return error_report(w, densify(m));
}

ErrorReport error_report(const DenseMatrix& w, const HssTree& t) {
  return error_report(w, densify(t));
}

ErrorReport error_report(const DenseMatrix& w, const ShssModel& m) {
  return error_report(w, densify_shss(m));
}

} // namespace hslr
