// Copyright 2026 the hslr authors
// SPDX-License-Identifier: Apache-2.0

#ifndef HSLR_TOOLS_UTIL_HPP
#define HSLR_TOOLS_UTIL_HPP

#include <charconv>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hslr/matrix_io.hpp"

namespace hslr::cli {

// Shortest decimal representation that round-trips the value, locale-free.
std::string format_float(float v);
std::string format_double(double v);

// One-line machine-parsable error record on stderr:
// {"error":"<kind>","message":"..."}
void emit_error(std::string_view kind, std::string_view message);

// Prints the error for e on stderr and returns the exit code for its class:
// 1 validation, 2 I/O, 3 numerical or unexpected.
int report_exception(const std::exception& e);

// Parses "f32" or "f16"; anything else is a ParamError.
Dtype parse_dtype(std::string_view name);

// Loads a vector stored as a 1 x n or n x 1 matrix file (binary or CSV).
std::vector<float> read_vector(const std::filesystem::path& path);

// Writes one value per line, full precision.
void write_vector(std::span<const float> x, const std::filesystem::path& path);

} // namespace hslr::cli

#endif // HSLR_TOOLS_UTIL_HPP
