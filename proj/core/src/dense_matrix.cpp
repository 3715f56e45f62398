// Copyright 2026 the hslr authors
// SPDX-License-Identifier: Apache-2.0

#include "hslr/dense_matrix.hpp"

#include <cmath>
#include <string>

#include "eigen_util.hpp"
#include "hslr/errors.hpp"

namespace hslr {

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), values_(rows * cols, 0.0f) {}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols,
                         std::vector<float> values)
    : rows_(rows), cols_(cols), values_(std::move(values)) {
  if (values_.size() != rows_ * cols_) {
    throw DimensionError("value buffer length " + std::to_string(values_.size()) +
                         " does not match " + std::to_string(rows_) + "x" +
                         std::to_string(cols_));
  }
}

bool DenseMatrix::all_finite() const {
  for (float v : values_) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

DenseMatrix DenseMatrix::block(std::size_t row0, std::size_t col0,
                               std::size_t nrows, std::size_t ncols) const {
  if (row0 + nrows > rows_ || col0 + ncols > cols_) {
    throw DimensionError("block exceeds matrix bounds");
  }
  DenseMatrix out(nrows, ncols);
  for (std::size_t i = 0; i < nrows; ++i) {
    const float* src = data() + (row0 + i) * cols_ + col0;
    float* dst = out.data() + i * ncols;
    std::copy(src, src + ncols, dst);
  }
  return out;
}

std::vector<float> matvec(const DenseMatrix& a, std::span<const float> x,
                          OpCount* ops) {
  if (x.size() != a.cols()) {
    throw DimensionError("matvec: vector length " + std::to_string(x.size()) +
                         " does not match " + std::to_string(a.cols()) +
                         " columns");
  }
  std::vector<float> y(a.rows(), 0.0f);
  if (a.size() > 0) {
    Eigen::Map<const Eigen::VectorXf> xv(x.data(),
                                         static_cast<Eigen::Index>(x.size()));
    Eigen::Map<Eigen::VectorXf> yv(y.data(), static_cast<Eigen::Index>(y.size()));
    yv.noalias() = emap(a) * xv;
  }
  if (ops) ops->multiply_adds += static_cast<std::uint64_t>(a.rows()) * a.cols();
  return y;
}

double frobenius_norm(const DenseMatrix& a) {
  double sum = 0.0;
  for (float v : a.values()) sum += static_cast<double>(v) * v;
  return std::sqrt(sum);
}

double max_abs(const DenseMatrix& a) {
  double best = 0.0;
  for (float v : a.values()) {
    double m = std::fabs(static_cast<double>(v));
    if (m > best) best = m;
  }
  return best;
}

void require_finite(const DenseMatrix& a, const char* what) {
  if (!a.all_finite()) {
    throw DataError(std::string(what) + " contains NaN or Inf");
  }
}

} // namespace hslr
