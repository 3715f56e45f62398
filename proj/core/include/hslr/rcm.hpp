// Copyright 2026 the hslr authors
// SPDX-License-Identifier: Apache-2.0

#ifndef HSLR_RCM_HPP
#define HSLR_RCM_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "hslr/dense_matrix.hpp"
#include "hslr/permutation.hpp"

namespace hslr {

/// Undirected pattern graph in CSR form: no self-loops, neighbor lists
/// sorted ascending, symmetric by construction.
class AdjacencyGraph {
public:
  AdjacencyGraph() = default;

  /// Builds a graph from symmetric edge pairs. Exposed for direct
  /// construction in tests; build_adjacency is the usual entry point.
  static AdjacencyGraph from_edges(std::size_t n,
                                   std::span<const std::pair<std::uint32_t, std::uint32_t>> edges);

  std::size_t num_vertices() const {
    return offsets_.empty() ? 0 : offsets_.size() - 1;
  }
  std::span<const std::uint32_t> neighbors(std::uint32_t v) const;
  std::size_t degree(std::uint32_t v) const;

private:
  std::vector<std::uint32_t> offsets_;
  std::vector<std::uint32_t> adjacency_;
};

/// Thresholded symmetrized pattern of a square matrix: vertices i and j
/// (i != j) are adjacent when |a(i,j)| > tol or |a(j,i)| > tol. The
/// diagonal never contributes. tol must be >= 0.
AdjacencyGraph build_adjacency(const DenseMatrix& a, float tol);

/// Reverse Cuthill-McKee ordering. Each connected component with at least
/// one edge is traversed by BFS from a pseudo-peripheral start vertex
/// (repeated BFS from the component's minimum-degree vertex until the
/// eccentricity stops growing), neighbors visited in order of increasing
/// degree with the smaller index first on ties, and that component's visit
/// order is then reversed. Components are emitted in order of their
/// smallest original vertex index; isolated vertices come last, keeping
/// their original relative order, so an edgeless graph maps to the
/// identity. The forward array maps new position to old vertex.
Permutation rcm_order(const AdjacencyGraph& g);

/// Simultaneous row and column reorder: out(i,j) = a(forward[i], forward[j]).
/// Requires a square and perm of matching length.
DenseMatrix apply_sym_perm(const DenseMatrix& a, const Permutation& perm);

/// Largest |i - j| over entries with |a(i,j)| > tol, zero when no entry
/// qualifies. Requires a square.
std::size_t bandwidth(const DenseMatrix& a, float tol);

} // namespace hslr

#endif // HSLR_RCM_HPP
