// Copyright 2026 the hslr authors
// SPDX-License-Identifier: Apache-2.0

#ifndef HSLR_PERMUTATION_HPP
#define HSLR_PERMUTATION_HPP

#include <cstdint>
#include <span>
#include <vector>

namespace hslr {

/// A permutation of {0, ..., n-1} stored both ways:
///   forward[new_pos] = old_pos   (used to gather into the new order)
///   inverse[old_pos] = new_pos   (used to scatter back)
class Permutation {
public:
  Permutation() = default;

  /// Validates that forward is a bijection on {0, ..., n-1} and derives
  /// the inverse. Throws DataError otherwise.
  static Permutation from_forward(std::vector<std::uint32_t> forward);

  static Permutation identity(std::size_t n);

  std::size_t size() const { return forward_.size(); }
  std::span<const std::uint32_t> forward() const { return forward_; }
  std::span<const std::uint32_t> inverse() const { return inverse_; }

  bool is_identity() const;

  bool operator==(const Permutation& other) const = default;

private:
  std::vector<std::uint32_t> forward_;
  std::vector<std::uint32_t> inverse_;
};

/// out[i] = x[forward[i]]: reorders x into the permuted ordering.
std::vector<float> apply_permutation(const Permutation& p, std::span<const float> x);

/// out[forward[i]] = x[i]: undoes apply_permutation.
std::vector<float> apply_inverse_permutation(const Permutation& p, std::span<const float> x);

} // namespace hslr

#endif // HSLR_PERMUTATION_HPP
