// Copyright 2026 the hslr authors
// SPDX-License-Identifier: Apache-2.0

#include "hslr/rcm.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hslr/errors.hpp"

namespace hslr {

AdjacencyGraph AdjacencyGraph::from_edges(
    std::size_t n,
    std::span<const std::pair<std::uint32_t, std::uint32_t>> edges) {
  std::vector<std::vector<std::uint32_t>> lists(n);
  for (const auto& [a, b] : edges) {
    if (a >= n || b >= n) {
      throw DataError("edge endpoint out of range");
    }
    if (a == b) {
      throw DataError("self-loops are not allowed");
    }
    lists[a].push_back(b);
    lists[b].push_back(a);
  }
  AdjacencyGraph g;
  g.offsets_.resize(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) {
    auto& list = lists[v];
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    g.offsets_[v + 1] = g.offsets_[v] + static_cast<std::uint32_t>(list.size());
    g.adjacency_.insert(g.adjacency_.end(), list.begin(), list.end());
  }
  return g;
}

std::span<const std::uint32_t> AdjacencyGraph::neighbors(std::uint32_t v) const {
  return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
}

std::size_t AdjacencyGraph::degree(std::uint32_t v) const {
  return offsets_[v + 1] - offsets_[v];
}

AdjacencyGraph build_adjacency(const DenseMatrix& a, float tol) {
  if (!a.is_square()) {
    throw DimensionError("adjacency graphs require a square matrix");
  }
  if (!(tol >= 0.0f)) {
    throw ParamError("graph threshold must be nonnegative");
  }
  const std::size_t n = a.rows();
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::fabs(a(i, j)) > tol || std::fabs(a(j, i)) > tol) {
        edges.emplace_back(static_cast<std::uint32_t>(i),
                           static_cast<std::uint32_t>(j));
      }
    }
  }
  return AdjacencyGraph::from_edges(n, edges);
}

namespace {

// Breadth-first levels from `start`, restricted to unassigned vertices.
// Returns the visit order; `levels` receives the distance of each visited
// vertex and `ecc` the largest one.
std::vector<std::uint32_t> bfs_component(const AdjacencyGraph& g,
                                         std::uint32_t start,
                                         std::vector<std::uint32_t>& levels,
                                         std::uint32_t& ecc) {
  std::vector<std::uint32_t> order;
  levels.assign(g.num_vertices(), std::uint32_t(-1));
  levels[start] = 0;
  ecc = 0;
  order.push_back(start);
  std::vector<std::uint32_t> sorted;
  for (std::size_t head = 0; head < order.size(); ++head) {
    const std::uint32_t v = order[head];
    sorted.assign(g.neighbors(v).begin(), g.neighbors(v).end());
    std::sort(sorted.begin(), sorted.end(),
              [&g](std::uint32_t x, std::uint32_t y) {
                const std::size_t dx = g.degree(x);
                const std::size_t dy = g.degree(y);
                return dx != dy ? dx < dy : x < y;
              });
    for (std::uint32_t w : sorted) {
      if (levels[w] == std::uint32_t(-1)) {
        levels[w] = levels[v] + 1;
        ecc = std::max(ecc, levels[w]);
        order.push_back(w);
      }
    }
  }
  return order;
}

// George-Liu pseudo-peripheral search: start from the component's
// minimum-degree vertex and repeatedly jump to a minimum-degree vertex of
// the farthest BFS level until the eccentricity stops growing.
std::uint32_t pseudo_peripheral(const AdjacencyGraph& g, std::uint32_t entry) {
  std::vector<std::uint32_t> levels;
  std::uint32_t ecc = 0;
  std::vector<std::uint32_t> component = bfs_component(g, entry, levels, ecc);

  auto min_degree_of = [&g](std::span<const std::uint32_t> vs) {
    std::uint32_t best = vs[0];
    for (std::uint32_t v : vs) {
      if (g.degree(v) < g.degree(best) ||
          (g.degree(v) == g.degree(best) && v < best)) {
        best = v;
      }
    }
    return best;
  };

  std::uint32_t current = min_degree_of(component);
  std::uint32_t current_ecc = 0;
  bfs_component(g, current, levels, current_ecc);
  for (;;) {
    std::vector<std::uint32_t> last_level;
    for (std::uint32_t v : component) {
      if (levels[v] == current_ecc) last_level.push_back(v);
    }
    const std::uint32_t candidate = min_degree_of(last_level);
    std::uint32_t candidate_ecc = 0;
    bfs_component(g, candidate, levels, candidate_ecc);
    if (candidate_ecc > current_ecc) {
      current = candidate;
      current_ecc = candidate_ecc;
    } else {
      return current;
    }
  }
}

} // namespace

Permutation rcm_order(const AdjacencyGraph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::uint32_t> forward;
  forward.reserve(n);
  std::vector<bool> assigned(n, false);

  // Vertices with no edges keep their relative order at the very end.
  std::vector<std::uint32_t> isolated;
  for (std::size_t v = 0; v < n; ++v) {
    if (g.degree(static_cast<std::uint32_t>(v)) == 0) {
      isolated.push_back(static_cast<std::uint32_t>(v));
      assigned[v] = true;
    }
  }

  std::vector<std::uint32_t> levels;
  for (std::size_t v = 0; v < n; ++v) {
    if (assigned[v]) continue;
    const std::uint32_t start =
        pseudo_peripheral(g, static_cast<std::uint32_t>(v));
    std::uint32_t ecc = 0;
    std::vector<std::uint32_t> order = bfs_component(g, start, levels, ecc);
    std::reverse(order.begin(), order.end());
    for (std::uint32_t w : order) assigned[w] = true;
    forward.insert(forward.end(), order.begin(), order.end());
  }
  forward.insert(forward.end(), isolated.begin(), isolated.end());
  return Permutation::from_forward(std::move(forward));
}

DenseMatrix apply_sym_perm(const DenseMatrix& a, const Permutation& perm) {
  if (!a.is_square()) {
    throw DimensionError("symmetric reordering requires a square matrix");
  }
  if (perm.size() != a.rows()) {
    throw DimensionError("permutation length " + std::to_string(perm.size()) +
                         " does not match matrix dimension " +
                         std::to_string(a.rows()));
  }
  const std::size_t n = a.rows();
  const auto fwd = perm.forward();
  DenseMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out(i, j) = a(fwd[i], fwd[j]);
    }
  }
  return out;
}

std::size_t bandwidth(const DenseMatrix& a, float tol) {
  if (!a.is_square()) {
    throw DimensionError("bandwidth requires a square matrix");
  }
  const std::size_t n = a.rows();
  std::size_t best = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (std::fabs(a(i, j)) > tol) {
        const std::size_t d = i > j ? i - j : j - i;
        if (d > best) best = d;
      }
    }
  }
  return best;
}

} // namespace hslr
