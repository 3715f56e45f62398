// Copyright 2026 the hslr authors
// SPDX-License-Identifier: Apache-2.0

#include "hslr/matrix_io.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "hslr/errors.hpp"
#include "hslr/half.hpp"
#include "wire.hpp"

namespace hslr {

namespace {

constexpr char kMagic[4] = {'H', 'S', 'L', 'R'};
constexpr std::uint32_t kVersion = 1;
constexpr std::size_t kCsvLimit = 1024;
// Caps rows*cols at ~2^33 to reject absurd headers before allocating.
constexpr std::uint64_t kMaxElements = 1ull << 33;

DenseMatrix read_binary(std::istream& in) {
  char magic[4];
  wire::get_bytes(in, magic, 4);
  if (!std::equal(magic, magic + 4, kMagic)) {
    throw FormatError("bad magic; not an HSLR matrix file");
  }
  const std::uint32_t version = wire::get_u32(in);
  if (version != kVersion) {
    throw FormatError("unsupported HSLR version " + std::to_string(version));
  }
  const std::uint32_t dtype = wire::get_u32(in);
  if (dtype > 1) {
    throw FormatError("unknown dtype code " + std::to_string(dtype));
  }
  const std::uint64_t rows = wire::get_u64(in);
  const std::uint64_t cols = wire::get_u64(in);
  if (rows == 0 || cols == 0) {
    throw CorruptFileError("matrix dimensions must be positive");
  }
  if (rows > kMaxElements / cols) {
    throw CorruptFileError("declared dimensions are implausibly large");
  }

  const std::size_t count = static_cast<std::size_t>(rows * cols);
  const std::size_t scalar = dtype == 0 ? 4 : 2;
  std::vector<char> payload(count * scalar);
  wire::get_bytes(in, payload.data(), payload.size());

  std::vector<float> values(count);
  const unsigned char* p = reinterpret_cast<const unsigned char*>(payload.data());
  if (dtype == 0) {
    for (std::size_t i = 0; i < count; ++i, p += 4) {
      std::uint32_t u = static_cast<std::uint32_t>(p[0]) |
                        (static_cast<std::uint32_t>(p[1]) << 8) |
                        (static_cast<std::uint32_t>(p[2]) << 16) |
                        (static_cast<std::uint32_t>(p[3]) << 24);
      values[i] = std::bit_cast<float>(u);
    }
  } else {
    for (std::size_t i = 0; i < count; ++i, p += 2) {
      std::uint16_t u = static_cast<std::uint16_t>(
          p[0] | (static_cast<std::uint16_t>(p[1]) << 8));
      values[i] = half_to_float(u);
    }
  }

  DenseMatrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols),
                std::move(values));
  require_finite(m, "matrix payload");
  return m;
}

DenseMatrix read_csv(std::istream& in) {
  std::vector<float> values;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() && in.peek() == std::char_traits<char>::eof()) break;
    std::size_t row_cols = 0;
    const char* cursor = line.data();
    const char* end = line.data() + line.size();
    for (;;) {
      const char* comma = std::find(cursor, end, ',');
      float v = 0.0f;
      auto [ptr, ec] = std::from_chars(cursor, comma, v);
      if (ec != std::errc() || ptr != comma) {
        throw FormatError("unparseable CSV value '" +
                          std::string(cursor, comma) + "' at row " +
                          std::to_string(rows));
      }
      values.push_back(v);
      ++row_cols;
      if (row_cols > kCsvLimit) {
        throw FormatError("CSV matrices are limited to 1024 columns");
      }
      if (comma == end) break;
      cursor = comma + 1;
    }
    if (rows == 0) {
      cols = row_cols;
    } else if (row_cols != cols) {
      throw CorruptFileError("CSV row " + std::to_string(rows) + " has " +
                             std::to_string(row_cols) + " values, expected " +
                             std::to_string(cols));
    }
    ++rows;
    if (rows > kCsvLimit) {
      throw FormatError("CSV matrices are limited to 1024 rows");
    }
  }
  if (rows == 0 || cols == 0) {
    throw CorruptFileError("CSV file holds no values");
  }
  DenseMatrix m(rows, cols, std::move(values));
  require_finite(m, "CSV payload");
  return m;
}

} // namespace

DenseMatrix read_matrix_stream(std::istream& in) {
  // Sniff the magic; anything else is treated as CSV.
  char magic[4] = {0, 0, 0, 0};
  in.read(magic, 4);
  const std::streamsize got = in.gcount();
  in.clear();
  in.seekg(0);
  if (got == 4 && std::equal(magic, magic + 4, kMagic)) {
    return read_binary(in);
  }
  return read_csv(in);
}

void write_matrix_stream(const DenseMatrix& m, std::ostream& out, Dtype dtype) {
  if (m.rows() == 0 || m.cols() == 0) {
    throw ParamError("cannot save a matrix with a zero dimension");
  }
  require_finite(m, "matrix");
  wire::put_bytes(out, kMagic, 4);
  wire::put_u32(out, kVersion);
  wire::put_u32(out, static_cast<std::uint32_t>(dtype));
  wire::put_u64(out, m.rows());
  wire::put_u64(out, m.cols());
  if (dtype == Dtype::F32) {
    for (float v : m.values()) wire::put_f32(out, v);
  } else {
    for (float v : m.values()) wire::put_u16(out, float_to_half(v));
  }
}

DenseMatrix load_matrix(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open " + path.string() + " for reading");
  }
  return read_matrix_stream(in);
}

void save_matrix(const DenseMatrix& m, const std::filesystem::path& path,
                 Dtype dtype) {
  std::ostringstream buffer(std::ios::binary);
  write_matrix_stream(m, buffer, dtype);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("cannot open " + path.string() + " for writing");
  }
  const std::string bytes = buffer.str();
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  out.flush();
  if (!out) {
    throw IoError("write to " + path.string() + " failed");
  }
}

} // namespace hslr
