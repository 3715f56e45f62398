// Copyright 2026 the hslr authors
// SPDX-License-Identifier: Apache-2.0

#include "hslr/permutation.hpp"

#include <numeric>
#include <string>

#include "hslr/errors.hpp"

namespace hslr {

Permutation Permutation::from_forward(std::vector<std::uint32_t> forward) {
  const std::size_t n = forward.size();
  std::vector<std::uint32_t> inverse(n, std::uint32_t(-1));
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint32_t v = forward[i];
    if (v >= n) {
      throw DataError("permutation entry " + std::to_string(v) +
                      " out of range for length " + std::to_string(n));
    }
    if (inverse[v] != std::uint32_t(-1)) {
      throw DataError("permutation repeats index " + std::to_string(v));
    }
    inverse[v] = static_cast<std::uint32_t>(i);
  }
  Permutation p;
  p.forward_ = std::move(forward);
  p.inverse_ = std::move(inverse);
  return p;
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::uint32_t> forward(n);
  std::iota(forward.begin(), forward.end(), 0u);
  Permutation p;
  p.inverse_ = forward;
  p.forward_ = std::move(forward);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < forward_.size(); ++i) {
    if (forward_[i] != i) return false;
  }
  return true;
}

std::vector<float> apply_permutation(const Permutation& p,
                                     std::span<const float> x) {
  if (x.size() != p.size()) {
    throw DimensionError("permutation length " + std::to_string(p.size()) +
                         " does not match vector length " +
                         std::to_string(x.size()));
  }
  std::vector<float> out(x.size());
  const auto fwd = p.forward();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = x[fwd[i]];
  return out;
}

std::vector<float> apply_inverse_permutation(const Permutation& p,
                                             std::span<const float> x) {
  if (x.size() != p.size()) {
    throw DimensionError("permutation length " + std::to_string(p.size()) +
                         " does not match vector length " +
                         std::to_string(x.size()));
  }
  std::vector<float> out(x.size());
  const auto fwd = p.forward();
  for (std::size_t i = 0; i < out.size(); ++i) out[fwd[i]] = x[i];
  return out;
}

} // namespace hslr
