// Copyright 2026 the hslr authors
// SPDX-License-Identifier: Apache-2.0

#include "hslr/low_rank.hpp"

#include <string>

#include "eigen_util.hpp"
#include "hslr/errors.hpp"

namespace hslr {

void validate(const LowRankFactor& f) {
  if (f.u.cols() != f.r.rows()) {
    throw DimensionError("factor inner dimensions disagree: u is " +
                         std::to_string(f.u.rows()) + "x" +
                         std::to_string(f.u.cols()) + ", r is " +
                         std::to_string(f.r.rows()) + "x" +
                         std::to_string(f.r.cols()));
  }
}

std::vector<float> apply(const LowRankFactor& f, std::span<const float> x,
                         OpCount* ops) {
  validate(f);
  if (x.size() != f.r.cols()) {
    throw DimensionError("factor apply: vector length " +
                         std::to_string(x.size()) + " does not match " +
                         std::to_string(f.r.cols()) + " columns");
  }
  std::vector<float> y(f.u.rows(), 0.0f);
  const std::size_t k = f.rank();
  if (k == 0) return y;
  std::vector<float> t = matvec(f.r, x, ops);
  std::vector<float> out = matvec(f.u, t, ops);
  return out;
}

DenseMatrix densify(const LowRankFactor& f) {
  validate(f);
  DenseMatrix out(f.u.rows(), f.r.cols());
  if (f.rank() == 0 || out.size() == 0) return out;
  // Accumulate the product in double; a single rounding per entry keeps
  // the oracle comparisons well inside their tolerances.
  emap(out) = (emap(f.u).cast<double>() * emap(f.r).cast<double>()).cast<float>();
  return out;
}

} // namespace hslr
