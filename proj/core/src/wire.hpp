// Copyright 2026 the hslr authors
// SPDX-License-Identifier: Apache-2.0

// Little-endian primitives shared by the matrix and model containers.
// Encoding is explicit byte shuffling, not raw struct writes, so files
// are identical across hosts.

#ifndef HSLR_WIRE_HPP
#define HSLR_WIRE_HPP

#include <bit>
#include <cstdint>
#include <istream>
#include <ostream>

#include "hslr/errors.hpp"

namespace hslr::wire {

inline void put_bytes(std::ostream& out, const char* data, std::size_t len) {
  out.write(data, static_cast<std::streamsize>(len));
}

inline void put_u8(std::ostream& out, std::uint8_t v) {
  char b = static_cast<char>(v);
  put_bytes(out, &b, 1);
}

inline void put_u16(std::ostream& out, std::uint16_t v) {
  char b[2] = {static_cast<char>(v & 0xff), static_cast<char>(v >> 8)};
  put_bytes(out, b, 2);
}

inline void put_u32(std::ostream& out, std::uint32_t v) {
  char b[4];
  for (int i = 0; i < 4; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  put_bytes(out, b, 4);
}

inline void put_u64(std::ostream& out, std::uint64_t v) {
  char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  put_bytes(out, b, 8);
}

inline void put_f32(std::ostream& out, float v) {
  put_u32(out, std::bit_cast<std::uint32_t>(v));
}

inline void put_f64(std::ostream& out, double v) {
  put_u64(out, std::bit_cast<std::uint64_t>(v));
}

inline void get_bytes(std::istream& in, char* data, std::size_t len) {
  in.read(data, static_cast<std::streamsize>(len));
  if (static_cast<std::size_t>(in.gcount()) != len) {
    throw CorruptFileError("unexpected end of file");
  }
}

inline std::uint8_t get_u8(std::istream& in) {
  char b;
  get_bytes(in, &b, 1);
  return static_cast<std::uint8_t>(b);
}

inline std::uint16_t get_u16(std::istream& in) {
  char b[2];
  get_bytes(in, b, 2);
  return static_cast<std::uint16_t>(static_cast<unsigned char>(b[0]) |
                                    (static_cast<unsigned char>(b[1]) << 8));
}

inline std::uint32_t get_u32(std::istream& in) {
  char b[4];
  get_bytes(in, b, 4);
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) {
    v |= static_cast<std::uint32_t>(static_cast<unsigned char>(b[i])) << (8 * i);
  }
  return v;
}

inline std::uint64_t get_u64(std::istream& in) {
  char b[8];
  get_bytes(in, b, 8);
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) {
    v |= static_cast<std::uint64_t>(static_cast<unsigned char>(b[i])) << (8 * i);
  }
  return v;
}

inline float get_f32(std::istream& in) { return std::bit_cast<float>(get_u32(in)); }

inline double get_f64(std::istream& in) { return std::bit_cast<double>(get_u64(in)); }

} // namespace hslr::wire

#endif // HSLR_WIRE_HPP
