// Copyright 2026 the hslr authors
// SPDX-License-Identifier: Apache-2.0

#ifndef HSLR_SPARSE_MATRIX_HPP
#define HSLR_SPARSE_MATRIX_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "hslr/dense_matrix.hpp"
#include "hslr/op_count.hpp"

namespace hslr {

struct SparseEntry {
  std::uint32_t row = 0;
  std::uint32_t col = 0;
  float value = 0.0f;

  bool operator==(const SparseEntry&) const = default;
};

/// Coordinate-format sparse matrix in canonical form: entries sorted by
/// (row, col) ascending, no duplicate coordinates, no stored zeros. The
/// canonical order makes serialization byte-deterministic.
class SparseMatrix {
public:
  SparseMatrix() = default;

  /// Empty matrix of the given shape.
  SparseMatrix(std::size_t rows, std::size_t cols);

  /// Builds the canonical form from an arbitrary entry list: sorts by
  /// (row, col), rejects duplicates and out-of-range coordinates, and
  /// drops exact zeros.
  static SparseMatrix from_entries(std::size_t rows, std::size_t cols,
                                   std::vector<SparseEntry> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nnz() const { return entries_.size(); }
  std::span<const SparseEntry> entries() const { return entries_; }

  bool operator==(const SparseMatrix& other) const = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<SparseEntry> entries_;
};

/// y[i] = sum over entries (i, j, v) of v*x[j].
std::vector<float> sparse_matvec(const SparseMatrix& s, std::span<const float> x,
                                 OpCount* ops = nullptr);

/// Dense matrix with the same values (zeros elsewhere).
DenseMatrix densify(const SparseMatrix& s);

} // namespace hslr

#endif // HSLR_SPARSE_MATRIX_HPP
