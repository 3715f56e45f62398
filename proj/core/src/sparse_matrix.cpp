// Copyright 2026 the hslr authors
// SPDX-License-Identifier: Apache-2.0

#include "hslr/sparse_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hslr/errors.hpp"

namespace hslr {

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols) {}

SparseMatrix SparseMatrix::from_entries(std::size_t rows, std::size_t cols,
                                        std::vector<SparseEntry> entries) {
  SparseMatrix s(rows, cols);
  std::erase_if(entries, [](const SparseEntry& e) { return e.value == 0.0f; });
  for (const SparseEntry& e : entries) {
    if (e.row >= rows || e.col >= cols) {
      throw DataError("sparse entry (" + std::to_string(e.row) + ", " +
                      std::to_string(e.col) + ") outside " +
                      std::to_string(rows) + "x" + std::to_string(cols));
    }
    if (!std::isfinite(e.value)) {
      throw DataError("sparse entry value is not finite");
    }
  }
  std::sort(entries.begin(), entries.end(),
            [](const SparseEntry& a, const SparseEntry& b) {
              return a.row != b.row ? a.row < b.row : a.col < b.col;
            });
  for (std::size_t i = 1; i < entries.size(); ++i) {
    if (entries[i - 1].row == entries[i].row &&
        entries[i - 1].col == entries[i].col) {
      throw DataError("duplicate sparse entry at (" +
                      std::to_string(entries[i].row) + ", " +
                      std::to_string(entries[i].col) + ")");
    }
  }
  s.entries_ = std::move(entries);
  return s;
}

std::vector<float> sparse_matvec(const SparseMatrix& s, std::span<const float> x,
                                 OpCount* ops) {
  if (x.size() != s.cols()) {
    throw DimensionError("sparse_matvec: vector length " +
                         std::to_string(x.size()) + " does not match " +
                         std::to_string(s.cols()) + " columns");
  }
  std::vector<float> y(s.rows(), 0.0f);
  for (const SparseEntry& e : s.entries()) {
    y[e.row] += e.value * x[e.col];
  }
  if (ops) ops->multiply_adds += s.nnz();
  return y;
}

DenseMatrix densify(const SparseMatrix& s) {
  DenseMatrix out(s.rows(), s.cols());
  for (const SparseEntry& e : s.entries()) {
    out(e.row, e.col) = e.value;
  }
  return out;
}

} // namespace hslr
