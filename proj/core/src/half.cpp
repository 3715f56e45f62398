// Copyright 2026 the hslr authors
// SPDX-License-Identifier: Apache-2.0

#include "hslr/half.hpp"

#include <bit>

#include "hslr/errors.hpp"

namespace hslr {

std::uint16_t float_to_half(float value) {
  const std::uint32_t f = std::bit_cast<std::uint32_t>(value);
  const std::uint32_t sign = (f >> 16) & 0x8000u;
  const std::uint32_t exp_field = (f >> 23) & 0xffu;
  const std::uint32_t mant = f & 0x007fffffu;

  if (exp_field == 0xffu) {
    if (mant != 0) return static_cast<std::uint16_t>(sign | 0x7e00u); // quiet NaN
    throw RangeError("infinite value cannot be stored as binary16");
  }

  const int exp = static_cast<int>(exp_field) - 127 + 15;
  if (exp >= 31) {
    throw RangeError("value exceeds the binary16 range");
  }
  if (exp <= 0) {
    // Subnormal half (or zero). Values below half the smallest subnormal
    // round to signed zero.
    if (exp < -10) return static_cast<std::uint16_t>(sign);
    const std::uint32_t full = mant | 0x00800000u; // implicit leading 1
    const std::uint32_t shift = static_cast<std::uint32_t>(14 - exp); // 14..24
    std::uint32_t half_mant = full >> shift;
    const std::uint32_t rem = full & ((1u << shift) - 1u);
    const std::uint32_t halfway = 1u << (shift - 1u);
    if (rem > halfway || (rem == halfway && (half_mant & 1u))) ++half_mant;
    // A carry out of the subnormal range lands exactly on the smallest
    // normal, so adding it into the raw bits is correct.
    return static_cast<std::uint16_t>(sign | half_mant);
  }

  std::uint32_t bits =
      sign | (static_cast<std::uint32_t>(exp) << 10) | (mant >> 13);
  const std::uint32_t rem = mant & 0x1fffu;
  if (rem > 0x1000u || (rem == 0x1000u && (bits & 1u))) {
    ++bits; // mantissa carry may roll into the exponent; that is exact
    if ((bits & 0x7fffu) >= 0x7c00u) {
      throw RangeError("value exceeds the binary16 range");
    }
  }
  return static_cast<std::uint16_t>(bits);
}

float half_to_float(std::uint16_t bits) {
  const std::uint32_t sign = static_cast<std::uint32_t>(bits & 0x8000u) << 16;
  const std::uint32_t exp = (bits >> 10) & 0x1fu;
  const std::uint32_t mant = bits & 0x3ffu;

  std::uint32_t f;
  if (exp == 0) {
    if (mant == 0) {
      f = sign; // signed zero
    } else {
      // Normalize the subnormal: shift until the leading 1 reaches bit 10.
      // The value is mant * 2^-24, so e shifts leave an unbiased exponent
      // of -14 - e once the leading 1 becomes implicit.
      std::uint32_t m = mant;
      int e = 0;
      while (!(m & 0x400u)) {
        m <<= 1;
        ++e;
      }
      f = sign | (static_cast<std::uint32_t>(127 - 14 - e) << 23) |
          ((m & 0x3ffu) << 13);
    }
  } else if (exp == 31) {
    f = sign | 0x7f800000u | (mant << 13);
  } else {
    f = sign | ((exp - 15 + 127) << 23) | (mant << 13);
  }
  return std::bit_cast<float>(f);
}

} // namespace hslr
