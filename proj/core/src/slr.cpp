// Copyright 2026 the hslr authors
// SPDX-License-Identifier: Apache-2.0

#include "hslr/slr.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "hslr/errors.hpp"

namespace hslr {

namespace {

// Selected linear indices -> (spikes, residual). The residual is the
// input with the selected positions zeroed.
SpikeSplit split_at(const DenseMatrix& w, std::span<const std::size_t> chosen) {
  SpikeSplit out;
  out.residual = w;
  std::vector<SparseEntry> entries;
  entries.reserve(chosen.size());
  const std::size_t cols = w.cols();
  for (std::size_t idx : chosen) {
    const std::size_t row = idx / cols;
    const std::size_t col = idx % cols;
    entries.push_back({static_cast<std::uint32_t>(row),
                       static_cast<std::uint32_t>(col), w(row, col)});
    out.residual(row, col) = 0.0f;
  }
  out.spikes = SparseMatrix::from_entries(w.rows(), w.cols(), std::move(entries));
  return out;
}

} // namespace

SpikeSplit extract_top_p(const DenseMatrix& w, double p) {
  if (!(p >= 0.0 && p <= 100.0)) {
    throw ParamError("spike percentage must lie in [0, 100]");
  }
  require_finite(w, "spike extraction input");
  const std::size_t total = w.size();
  const std::size_t n_keep = static_cast<std::size_t>(
      std::llround(p / 100.0 * static_cast<double>(total)));
  if (n_keep == 0) {
    return SpikeSplit{SparseMatrix(w.rows(), w.cols()), w};
  }

  std::vector<std::size_t> order(total);
  std::iota(order.begin(), order.end(), std::size_t{0});
  const float* values = w.data();
  // Larger magnitude first; ties by linear index, which in row-major
  // storage is exactly (row, col) lexicographic order.
  auto before = [values](std::size_t a, std::size_t b) {
    const float ma = std::fabs(values[a]);
    const float mb = std::fabs(values[b]);
    return ma != mb ? ma > mb : a < b;
  };
  if (n_keep < total) {
    std::nth_element(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(n_keep),
                     order.end(), before);
    order.resize(n_keep);
  }
  return split_at(w, order);
}

SpikeSplit extract_above(const DenseMatrix& w, float threshold) {
  if (!(threshold > 0.0f) || !std::isfinite(threshold)) {
    throw ParamError("spike threshold must be positive and finite");
  }
  require_finite(w, "spike extraction input");
  std::vector<std::size_t> chosen;
  const float* values = w.data();
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (std::fabs(values[i]) >= threshold) chosen.push_back(i);
  }
  return split_at(w, chosen);
}

SparseLowRank sparse_plus_svd(const DenseMatrix& w, double p, std::size_t k,
                              float eps) {
  SpikeSplit split = extract_top_p(w, p);
  SparseLowRank out;
  out.spikes = std::move(split.spikes);
  out.factor = to_factor(truncated_svd(split.residual, k, eps));
  out.method = SlrMethod::Ssvd;
  out.params = SlrParams{p, k, 0, 0, eps, RngSeed{}};
  return out;
}

SparseLowRank sparse_plus_rsvd(const DenseMatrix& w, double p, std::size_t k,
                               std::size_t q, std::size_t power_iters, float eps,
                               RngSeed seed) {
  SpikeSplit split = extract_top_p(w, p);
  SparseLowRank out;
  out.spikes = std::move(split.spikes);
  out.factor = to_factor(randomized_svd(split.residual, k, q, power_iters, eps, seed));
  out.method = SlrMethod::Srsvd;
  out.params = SlrParams{p, k, q, power_iters, eps, seed};
  return out;
}

static void check_conformable(const SparseLowRank& m) {
  if (m.factor.out_rows() != m.spikes.rows() ||
      m.factor.in_cols() != m.spikes.cols()) {
    throw DimensionError("spike matrix and factor shapes disagree");
  }
}

std::vector<float> slr_matvec(const SparseLowRank& m, std::span<const float> x,
                              OpCount* ops) {
  check_conformable(m);
  std::vector<float> y = sparse_matvec(m.spikes, x, ops);
  const std::vector<float> lr = apply(m.factor, x, ops);
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += lr[i];
  return y;
}

DenseMatrix densify(const SparseLowRank& m) {
  check_conformable(m);
  DenseMatrix out = densify(m.factor);
  for (const SparseEntry& e : m.spikes.entries()) {
    out(e.row, e.col) += e.value;
  }
  return out;
}

} // namespace hslr
