// Copyright 2026 the hslr authors
// SPDX-License-Identifier: Apache-2.0

#ifndef HSLR_DENSE_MATRIX_HPP
#define HSLR_DENSE_MATRIX_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "hslr/op_count.hpp"

namespace hslr {

/// Row-major dense matrix of 32-bit reals. Values are stored contiguously,
/// row by row. Matrices ingested from files are validated to have positive
/// dimensions and finite entries; zero-sized matrices are permitted in
/// memory so empty (rank-0) factors have a representation.
class DenseMatrix {
public:
  DenseMatrix() = default;

  /// Zero-filled rows-by-cols matrix.
  DenseMatrix(std::size_t rows, std::size_t cols);

  /// Takes ownership of `values`; throws DimensionError when the length is
  /// not rows*cols.
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<float> values);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }
  bool is_square() const { return rows_ == cols_; }

  float operator()(std::size_t i, std::size_t j) const {
    return values_[i * cols_ + j];
  }
  float& operator()(std::size_t i, std::size_t j) {
    return values_[i * cols_ + j];
  }

  const std::vector<float>& values() const { return values_; }
  std::vector<float>& values() { return values_; }
  const float* data() const { return values_.data(); }
  float* data() { return values_.data(); }

  bool all_finite() const;

  /// Dense copy of the block starting at (row0, col0).
  DenseMatrix block(std::size_t row0, std::size_t col0, std::size_t nrows,
                    std::size_t ncols) const;

  bool operator==(const DenseMatrix& other) const = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<float> values_;
};

/// y = a*x in 32-bit arithmetic. Throws DimensionError when x length does
/// not equal a.cols().
std::vector<float> matvec(const DenseMatrix& a, std::span<const float> x,
                          OpCount* ops = nullptr);

/// Frobenius norm with double accumulation.
double frobenius_norm(const DenseMatrix& a);

/// Largest absolute entry.
double max_abs(const DenseMatrix& a);

/// Throws DataError when `a` contains NaN or Inf.
void require_finite(const DenseMatrix& a, const char* what);

} // namespace hslr

#endif // HSLR_DENSE_MATRIX_HPP
