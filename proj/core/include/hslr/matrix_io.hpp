// Copyright 2026 the hslr authors
// SPDX-License-Identifier: Apache-2.0

#ifndef HSLR_MATRIX_IO_HPP
#define HSLR_MATRIX_IO_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>

#include "hslr/dense_matrix.hpp"

namespace hslr {

/// On-disk element type of an HSLR matrix file or HSLM payload.
enum class Dtype : std::uint32_t {
  F32 = 0,
  F16 = 1,
};

/// Binary dense-matrix container:
///   magic "HSLR" | u32 version (=1) | u32 dtype | u64 rows | u64 cols |
///   row-major payload (f32 or f16, little-endian)
/// Rows and cols must be positive; every payload value must be finite.
///
/// Load sniffs the magic: files starting with "HSLR" parse as binary,
/// anything else parses as CSV (one row per line, comma-separated floats,
/// all rows the same length, at most 1024 x 1024). F16 payloads are
/// widened to float on load.
DenseMatrix load_matrix(const std::filesystem::path& path);

/// Writes the binary container. With Dtype::F16 every value is rounded to
/// binary16 first; magnitudes above the half range throw RangeError.
void save_matrix(const DenseMatrix& m, const std::filesystem::path& path,
                 Dtype dtype = Dtype::F32);

/// Stream variants, exposed for in-memory round-trip tests.
DenseMatrix read_matrix_stream(std::istream& in);
void write_matrix_stream(const DenseMatrix& m, std::ostream& out, Dtype dtype);

} // namespace hslr

#endif // HSLR_MATRIX_IO_HPP
