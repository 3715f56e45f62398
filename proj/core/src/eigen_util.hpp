// Copyright 2026 the hslr authors
// SPDX-License-Identifier: Apache-2.0

// Zero-copy views between DenseMatrix and Eigen. Internal only.

#ifndef HSLR_EIGEN_UTIL_HPP
#define HSLR_EIGEN_UTIL_HPP

#include <Eigen/Dense>

#include "hslr/dense_matrix.hpp"

namespace hslr {

using EMatrixRM =
    Eigen::Matrix<float, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

inline Eigen::Map<const EMatrixRM> emap(const DenseMatrix& m) {
  return {m.data(), static_cast<Eigen::Index>(m.rows()),
          static_cast<Eigen::Index>(m.cols())};
}

inline Eigen::Map<EMatrixRM> emap(DenseMatrix& m) {
  return {m.data(), static_cast<Eigen::Index>(m.rows()),
          static_cast<Eigen::Index>(m.cols())};
}

template <typename Derived>
DenseMatrix from_eigen(const Eigen::MatrixBase<Derived>& e) {
  DenseMatrix out(static_cast<std::size_t>(e.rows()),
                  static_cast<std::size_t>(e.cols()));
  if (out.size() > 0) emap(out) = e.template cast<float>();
  return out;
}

} // namespace hslr

#endif // HSLR_EIGEN_UTIL_HPP
