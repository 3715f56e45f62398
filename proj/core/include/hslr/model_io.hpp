// Copyright 2026 the hslr authors
// SPDX-License-Identifier: Apache-2.0

#ifndef HSLR_MODEL_IO_HPP
#define HSLR_MODEL_IO_HPP

#include <filesystem>
#include <iosfwd>

#include "hslr/matrix_io.hpp"
#include "hslr/model.hpp"

namespace hslr {

/// HSLM model container, little-endian throughout:
///
///   magic "HSLM" | u32 version (=1) | u32 dtype | u32 method |
///   u64 rows | u64 cols | params | payload
///
///   params: f64 p | u64 rank | u64 depth | u64 oversample |
///           u64 power_iters | f32 eps | u64 seed | u8 spike_rule |
///           f32 spike_threshold
///
/// Values (factor entries, spike values, leaf blocks) are stored at the
/// chosen dtype; indices are fixed-width integers regardless of dtype.
/// Component encodings:
///
///   matrix: u64 rows | u64 cols | rows*cols values (row-major)
///   factor: matrix u | matrix r
///   sparse: u64 rows | u64 cols | u64 nnz | nnz x (u32 row | u32 col | value)
///   perm:   u64 n | n x u32 (forward, new position -> old)
///   node:   u8 tag (0 leaf | 1 internal);
///           leaf: matrix
///           internal: u64 dim | u64 split | u64 rank_at_level | u64 depth |
///                     sparse spikes | u8 has_perm | [perm] |
///                     factor off01 | factor off10 | node child0 | node child1
///
/// Payload by method: svd/rsvd: factor; ssvd/srsvd: sparse | factor;
/// shss/shss-rcm: node (the root).
void save_model(const Model& m, const std::filesystem::path& path,
                Dtype dtype = Dtype::F32);

/// Reads a container written by save_model. F16 values are widened to
/// float. Throws FormatError on bad magic/version, CorruptFileError on
/// truncation or inconsistent structure, DataError on non-finite values.
Model load_model(const std::filesystem::path& path);

/// Stream variants, exposed for in-memory round-trip tests.
void write_model_stream(const Model& m, std::ostream& out, Dtype dtype);
Model read_model_stream(std::istream& in);

} // namespace hslr

#endif // HSLR_MODEL_IO_HPP
