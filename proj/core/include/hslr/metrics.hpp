// Copyright 2026 the hslr authors
// SPDX-License-Identifier: Apache-2.0

#ifndef HSLR_METRICS_HPP
#define HSLR_METRICS_HPP

#include <cstdint>

#include "hslr/dense_matrix.hpp"
#include "hslr/hss.hpp"
#include "hslr/low_rank.hpp"
#include "hslr/shss.hpp"
#include "hslr/slr.hpp"

namespace hslr {

/// Storage accounting by exact traversal, never by formula. stored_values
/// counts value scalars (spike values, factor entries, dense leaf
/// entries); index_overhead counts stored integers (two coordinates per
/// spike plus one entry per permutation slot) and is reported separately
/// so byte footprints can be computed for any index width.
struct StorageReport {
  std::uint64_t dense_params = 0;
  std::uint64_t stored_values = 0;
  std::uint64_t index_overhead = 0;
  double compression_ratio = 0.0; // dense_params / stored_values

  bool operator==(const StorageReport&) const = default;
};

StorageReport storage_count(const LowRankFactor& f);
StorageReport storage_count(const SparseLowRank& m);
StorageReport storage_count(const HssTree& t);
StorageReport storage_count(const ShssModel& m);

/// Reconstruction error of a model against the original matrix. When
/// ||w||_F < 1e-12 the relative error falls back to the absolute one and
/// rel_is_abs is set.
struct ErrorReport {
  double frobenius_abs = 0.0;
  double frobenius_rel = 0.0;
  double max_abs = 0.0;
  bool rel_is_abs = false;

  bool operator==(const ErrorReport&) const = default;
};

/// Compares w against an explicit reconstruction, accumulating in double.
ErrorReport error_report(const DenseMatrix& w, const DenseMatrix& approx);

ErrorReport error_report(const DenseMatrix& w, const LowRankFactor& f);
ErrorReport error_report(const DenseMatrix& w, const SparseLowRank& m);
ErrorReport error_report(const DenseMatrix& w, const HssTree& t);
ErrorReport error_report(const DenseMatrix& w, const ShssModel& m);

} // namespace hslr

#endif // HSLR_METRICS_HPP
