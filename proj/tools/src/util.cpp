// Copyright 2026 the hslr authors
// SPDX-License-Identifier: Apache-2.0

#include "util.hpp"

#include <array>
#include <fstream>
#include <iostream>

#include <json.hpp>

#include "hslr/errors.hpp"

namespace hslr::cli {

namespace {

template <typename T>
std::string format_value(T v) {
  std::array<char, 64> buf;
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

} // namespace

std::string format_float(float v) { return format_value(v); }
std::string format_double(double v) { return format_value(v); }

void emit_error(std::string_view kind, std::string_view message) {
  nlohmann::ordered_json j;
  j["error"] = kind;
  j["message"] = message;
  std::cerr << j.dump() << "\n";
}

int report_exception(const std::exception& e) {
  if (dynamic_cast<const NumericError*>(&e)) {
    emit_error("numeric", e.what());
    return 3;
  }
  if (dynamic_cast<const IoError*>(&e)) {
    emit_error("io", e.what());
    return 2;
  }
  if (dynamic_cast<const FormatError*>(&e)) {
    emit_error("format", e.what());
    return 2;
  }
  if (dynamic_cast<const CorruptFileError*>(&e)) {
    emit_error("corrupt", e.what());
    return 2;
  }
  if (dynamic_cast<const DataError*>(&e)) {
    emit_error("data", e.what());
    return 2;
  }
  if (dynamic_cast<const ParamError*>(&e)) {
    emit_error("param", e.what());
    return 1;
  }
  if (dynamic_cast<const DimensionError*>(&e)) {
    emit_error("dimension", e.what());
    return 1;
  }
  if (dynamic_cast<const RangeError*>(&e)) {
    emit_error("range", e.what());
    return 1;
  }
  if (dynamic_cast<const Error*>(&e)) {
    emit_error("invalid", e.what());
    return 1;
  }
  emit_error("internal", e.what());
  return 3;
}

Dtype parse_dtype(std::string_view name) {
  if (name == "f32") return Dtype::F32;
  if (name == "f16") return Dtype::F16;
  throw ParamError("unknown dtype \"" + std::string(name) +
                   "\"; expected f32 or f16");
}

std::vector<float> read_vector(const std::filesystem::path& path) {
  const DenseMatrix m = load_matrix(path);
  if (m.rows() != 1 && m.cols() != 1) {
    throw DimensionError("vector file " + path.string() + " is " +
                         std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) +
                         "; expected a single row or column");
  }
  return m.values();
}

void write_vector(std::span<const float> x, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) {
    throw IoError("cannot open " + path.string() + " for writing");
  }
  for (float v : x) out << format_float(v) << "\n";
  out.flush();
  if (!out) {
    throw IoError("write to " + path.string() + " failed");
  }
}

} // namespace hslr::cli
