// Copyright 2026 the hslr authors
// SPDX-License-Identifier: Apache-2.0

#ifndef HSLR_OP_COUNT_HPP
#define HSLR_OP_COUNT_HPP

#include <cstdint>

namespace hslr {

/// Multiply-add counter threaded through the matvec kernels. A dense
/// m-by-n product contributes m*n, a sparse product contributes nnz, and a
/// low-rank factor apply contributes the cost of its two thin products.
/// Vector additions and permutations contribute nothing.
struct OpCount {
  std::uint64_t multiply_adds = 0;
};

} // namespace hslr

#endif // HSLR_OP_COUNT_HPP
