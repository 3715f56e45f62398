// Copyright 2026 the hslr authors
// SPDX-License-Identifier: Apache-2.0

#include "hslr/svd.hpp"

#include <algorithm>
#include <string>

#include "eigen_util.hpp"
#include "hslr/errors.hpp"

namespace hslr {

namespace {

// Packs the leading k triplets of a thin Eigen SVD into an SvdResult,
// zeroing singular values at or below eps.
SvdResult pack_result(const Eigen::MatrixXf& u_full, const Eigen::VectorXf& sigma,
                      const Eigen::MatrixXf& v_full, std::size_t k, float eps) {
  const auto ki = static_cast<Eigen::Index>(k);
  SvdResult out;
  out.u = from_eigen(u_full.leftCols(ki));
  out.vt = from_eigen(v_full.leftCols(ki).transpose());
  out.sigma.resize(k);
  out.achieved_rank = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const float s = sigma(static_cast<Eigen::Index>(i));
    if (s > eps) {
      out.sigma[i] = s;
      ++out.achieved_rank;
    } else {
      out.sigma[i] = 0.0f;
    }
  }
  return out;
}

Eigen::MatrixXf orthonormal_columns(const Eigen::MatrixXf& y) {
  Eigen::HouseholderQR<Eigen::MatrixXf> qr(y);
  Eigen::MatrixXf q = Eigen::MatrixXf::Identity(y.rows(), y.cols());
  q.applyOnTheLeft(qr.householderQ());
  return q;
}

} // namespace

SvdResult truncated_svd(const DenseMatrix& a, std::size_t k, float eps) {
  require_finite(a, "svd input");
  const std::size_t mn = std::min(a.rows(), a.cols());
  if (k < 1 || k > mn) {
    throw ParamError("rank " + std::to_string(k) + " out of range for a " +
                     std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                     " matrix");
  }
  if (!(eps >= 0.0f)) {
    throw ParamError("drop tolerance must be nonnegative");
  }
  Eigen::MatrixXf dense = emap(a);
  Eigen::BDCSVD<Eigen::MatrixXf> svd(dense,
                                     Eigen::ComputeThinU | Eigen::ComputeThinV);
  if (svd.info() != Eigen::Success) {
    throw NumericError("SVD failed to converge");
  }
  return pack_result(svd.matrixU(), svd.singularValues(), svd.matrixV(), k, eps);
}

SvdResult randomized_svd(const DenseMatrix& a, std::size_t k,
                         std::size_t oversample, std::size_t power_iters,
                         float eps, RngSeed seed) {
  require_finite(a, "svd input");
  const std::size_t mn = std::min(a.rows(), a.cols());
  if (k < 1) {
    throw ParamError("rank must be at least 1");
  }
  const std::size_t sketch = k + oversample;
  if (sketch > mn) {
    throw ParamError("sketch width " + std::to_string(sketch) +
                     " (rank + oversample) exceeds min dimension " +
                     std::to_string(mn));
  }
  if (!(eps >= 0.0f)) {
    throw ParamError("drop tolerance must be nonnegative");
  }

  const Eigen::Map<const EMatrixRM> am = emap(a);
  const DenseMatrix omega_host =
      gaussian_matrix(a.cols(), sketch, seed); // n x (k+q)
  Eigen::MatrixXf omega = emap(omega_host);

  Eigen::MatrixXf q = orthonormal_columns(am * omega);
  for (std::size_t it = 0; it < power_iters; ++it) {
    const Eigen::MatrixXf z = orthonormal_columns(am.transpose() * q);
    q = orthonormal_columns(am * z);
  }

  const Eigen::MatrixXf b = q.transpose() * am; // (k+q) x n
  Eigen::BDCSVD<Eigen::MatrixXf> svd(b, Eigen::ComputeThinU | Eigen::ComputeThinV);
  if (svd.info() != Eigen::Success) {
    throw NumericError("SVD failed to converge");
  }
  const Eigen::MatrixXf u_lift = q * svd.matrixU();
  return pack_result(u_lift, svd.singularValues(), svd.matrixV(), k, eps);
}

LowRankFactor to_factor(const SvdResult& svd) {
  const std::size_t ar = svd.achieved_rank;
  const std::size_t m = svd.u.rows();
  const std::size_t n = svd.vt.cols();
  LowRankFactor f{DenseMatrix(m, ar), DenseMatrix(ar, n)};
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < ar; ++j) {
      f.u(i, j) = svd.u(i, j) * svd.sigma[j];
    }
  }
  for (std::size_t i = 0; i < ar; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      f.r(i, j) = svd.vt(i, j);
    }
  }
  return f;
}

} // namespace hslr
