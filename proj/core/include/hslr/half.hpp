// Copyright 2026 the hslr authors
// SPDX-License-Identifier: Apache-2.0

#ifndef HSLR_HALF_HPP
#define HSLR_HALF_HPP

#include <cstdint>

namespace hslr {

/// IEEE 754 binary16 conversion, used only at the storage boundary; all
/// arithmetic stays in float. Rounding is round-to-nearest-even.

/// Largest finite binary16 value.
inline constexpr float kHalfMax = 65504.0f;

/// Encodes a float as binary16 bits. Values whose rounded magnitude
/// exceeds kHalfMax throw RangeError; NaN is preserved as a quiet NaN.
std::uint16_t float_to_half(float value);

/// Decodes binary16 bits to float. Exact for every half value.
float half_to_float(std::uint16_t bits);

} // namespace hslr

#endif // HSLR_HALF_HPP
