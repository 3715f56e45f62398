// Copyright 2026 the hslr authors
// SPDX-License-Identifier: Apache-2.0

// Independent reference implementations the tests compare against. These
// deliberately avoid the library's compute paths: plain double loops for
// matvec and norms, and Jacobi SVD in double where the library uses
// bidiagonal divide-and-conquer in float.

#ifndef HSLR_TESTS_ORACLES_HPP
#define HSLR_TESTS_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <numeric>
#include <random>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "hslr/dense_matrix.hpp"
#include "hslr/rng.hpp"

namespace hslr::test {

inline std::vector<double> dense_matvec_oracle(const DenseMatrix& a,
                                               std::span<const float> x) {
  std::vector<double> y(a.rows(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      acc += static_cast<double>(a(i, j)) * static_cast<double>(x[j]);
    }
    y[i] = acc;
  }
  return y;
}

inline double frob_oracle(const DenseMatrix& a) {
  double acc = 0.0;
  for (float v : a.values()) acc += static_cast<double>(v) * v;
  return std::sqrt(acc);
}

inline double frob_diff_oracle(const DenseMatrix& a, const DenseMatrix& b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d =
        static_cast<double>(a.values()[i]) - static_cast<double>(b.values()[i]);
    acc += d * d;
  }
  return std::sqrt(acc);
}

/// All singular values, non-increasing, via double-precision Jacobi SVD.
inline std::vector<double> singular_values_oracle(const DenseMatrix& a) {
  Eigen::MatrixXd m(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = a(i, j);
    }
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& sv = svd.singularValues();
  return std::vector<double>(sv.data(), sv.data() + sv.size());
}

/// sqrt(sum of squared singular values past the first k): the Frobenius
/// error of the optimal rank-k approximation.
inline double tail_rss(const std::vector<double>& sv, std::size_t k) {
  double acc = 0.0;
  for (std::size_t i = k; i < sv.size(); ++i) acc += sv[i] * sv[i];
  return std::sqrt(acc);
}

/// ||y - ref|| / max(||ref||, floor), accumulated in double.
inline double rel_vec_err(std::span<const float> y,
                          const std::vector<double>& ref,
                          double floor = 1e-30) {
  double diff2 = 0.0;
  double ref2 = 0.0;
  for (std::size_t i = 0; i < ref.size(); ++i) {
    const double d = static_cast<double>(y[i]) - ref[i];
    diff2 += d * d;
    ref2 += ref[i] * ref[i];
  }
  return std::sqrt(diff2) / std::max(std::sqrt(ref2), floor);
}

inline std::vector<float> random_vector(std::size_t n, std::uint64_t seed) {
  GaussianSampler sampler(RngSeed{seed});
  std::vector<float> x(n);
  for (auto& v : x) v = sampler.next();
  return x;
}

inline DenseMatrix tridiagonal(std::size_t n, float diag, float off) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = diag;
    if (i + 1 < n) {
      m(i, i + 1) = off;
      m(i + 1, i) = off;
    }
  }
  return m;
}

/// Fisher-Yates shuffle driven by the standard engine; independent of the
/// library's RandomBits.
inline std::vector<std::uint32_t> random_forward(std::size_t n,
                                                 std::uint64_t seed) {
  std::vector<std::uint32_t> forward(n);
  std::iota(forward.begin(), forward.end(), 0u);
  std::mt19937_64 engine(seed);
  for (std::size_t i = n; i > 1; --i) {
    const auto j = static_cast<std::size_t>(engine() % i);
    std::swap(forward[i - 1], forward[j]);
  }
  return forward;
}

inline bool bits_equal(const DenseMatrix& a, const DenseMatrix& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() &&
         std::memcmp(a.data(), b.data(), a.size() * sizeof(float)) == 0;
}

} // namespace hslr::test

#endif // HSLR_TESTS_ORACLES_HPP
