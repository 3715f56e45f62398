// Copyright 2026 the hslr authors
// SPDX-License-Identifier: Apache-2.0

#ifndef HSLR_LOW_RANK_HPP
#define HSLR_LOW_RANK_HPP

#include <span>
#include <vector>

#include "hslr/dense_matrix.hpp"
#include "hslr/op_count.hpp"

namespace hslr {

/// Rank-k factorization A ~ u * r with u m-by-k and r k-by-n. The
/// singular values are folded into u (u = U * diag(sigma), r = V^T), so
/// applying the factor is exactly two thin products. k may be zero, in
/// which case the factor represents an all-zero block while still
/// carrying its m and n.
struct LowRankFactor {
  DenseMatrix u; // m x k
  DenseMatrix r; // k x n

  std::size_t out_rows() const { return u.rows(); }
  std::size_t in_cols() const { return r.cols(); }
  std::size_t rank() const { return u.cols(); }

  bool operator==(const LowRankFactor&) const = default;
};

/// Throws DimensionError unless u.cols() == r.rows().
void validate(const LowRankFactor& f);

/// y = u * (r * x), two thin matvecs. Rank zero yields the zero vector.
std::vector<float> apply(const LowRankFactor& f, std::span<const float> x,
                         OpCount* ops = nullptr);

/// Dense u * r, accumulated in double and rounded to float once per entry.
DenseMatrix densify(const LowRankFactor& f);

} // namespace hslr

#endif // HSLR_LOW_RANK_HPP
