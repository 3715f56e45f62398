// Copyright 2026 the hslr authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cstdint>
#include <utility>
#include <vector>

#include "hslr/errors.hpp"
#include "hslr/rcm.hpp"
#include "oracles.hpp"

using namespace hslr;

TEST_CASE("build_adjacency of a diagonal matrix has no edges") {
  DenseMatrix a(4, 4);
  for (std::size_t i = 0; i < 4; ++i) a(i, i) = 5.0f;
  const AdjacencyGraph g = build_adjacency(a, 0.5f);
  REQUIRE(g.num_vertices() == 4);
  for (std::uint32_t v = 0; v < 4; ++v) CHECK(g.degree(v) == 0);
}

TEST_CASE("build_adjacency of a tridiagonal matrix is the path graph") {
  const DenseMatrix a = test::tridiagonal(6, 2.0f, 1.0f);
  const AdjacencyGraph g = build_adjacency(a, 0.5f);
  for (std::uint32_t v = 0; v < 6; ++v) {
    std::vector<std::uint32_t> expected;
    if (v > 0) expected.push_back(v - 1);
    if (v < 5) expected.push_back(v + 1);
    const auto nbrs = g.neighbors(v);
    REQUIRE(nbrs.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
      CHECK(nbrs[i] == expected[i]);
    }
  }
}

TEST_CASE("build_adjacency symmetrizes one-sided entries") {
  DenseMatrix a(3, 3);
  a(0, 2) = 1.0f;
  const AdjacencyGraph g = build_adjacency(a, 0.5f);
  REQUIRE(g.degree(0) == 1);
  CHECK(g.neighbors(0)[0] == 2);
  REQUIRE(g.degree(2) == 1);
  CHECK(g.neighbors(2)[0] == 0);
  CHECK(g.degree(1) == 0);
}

TEST_CASE("build_adjacency threshold is strict and tol must be non-negative") {
  DenseMatrix a(2, 2);
  a(0, 1) = a(1, 0) = 0.5f;
  CHECK(build_adjacency(a, 0.5f).degree(0) == 0);
  CHECK(build_adjacency(a, 0.49f).degree(0) == 1);
  CHECK_THROWS_AS(build_adjacency(a, -1.0f), ParamError);
  CHECK_THROWS_AS(build_adjacency(DenseMatrix(2, 3), 0.5f), DimensionError);
}

TEST_CASE("rcm_order on an edgeless graph is the identity") {
  const AdjacencyGraph g = build_adjacency(DenseMatrix(4, 4), 0.0f);
  CHECK(rcm_order(g).is_identity());
}

TEST_CASE("rcm_order recovers unit bandwidth on a scrambled tridiagonal") {
  for (std::size_t n : {8u, 16u, 64u}) {
    const DenseMatrix a = test::tridiagonal(n, 2.0f, 1.0f);
    const Permutation scramble =
        Permutation::from_forward(test::random_forward(n, 1000 + n));
    const DenseMatrix scrambled = apply_sym_perm(a, scramble);
    const Permutation order = rcm_order(build_adjacency(scrambled, 0.5f));
    const DenseMatrix restored = apply_sym_perm(scrambled, order);
    CHECK(bandwidth(restored, 0.5f) == 1);
  }
}

TEST_CASE("rcm_order from explicit edges is deterministic") {
  // A 5-path 3-0-4-1-2 given out of order; RCM must order it as a path
  // either way round, and repeated calls agree exactly.
  const std::vector<std::pair<std::uint32_t, std::uint32_t>> edges = {
      {0, 3}, {0, 4}, {1, 4}, {1, 2}};
  const AdjacencyGraph g = AdjacencyGraph::from_edges(5, edges);
  const Permutation p1 = rcm_order(g);
  const Permutation p2 = rcm_order(g);
  CHECK(p1 == p2);
  DenseMatrix a(5, 5);
  for (const auto& [u, v] : edges) a(u, v) = a(v, u) = 1.0f;
  CHECK(bandwidth(apply_sym_perm(a, p1), 0.5f) == 1);
}

TEST_CASE("apply_sym_perm reorders rows and columns together") {
  const DenseMatrix a(3, 3, {0, 1, 2, 3, 4, 5, 6, 7, 8});
  SUBCASE("identity is a no-op") {
    CHECK(apply_sym_perm(a, Permutation::identity(3)) == a);
  }
  SUBCASE("explicit permutation") {
    const Permutation p = Permutation::from_forward({2, 0, 1});
    const DenseMatrix b = apply_sym_perm(a, p);
    CHECK(b(0, 0) == a(2, 2));
    CHECK(b(0, 1) == a(2, 0));
    CHECK(b(1, 2) == a(0, 1));
  }
  SUBCASE("inverse permutation undoes the reorder") {
    const Permutation p = Permutation::from_forward({1, 2, 0});
    const DenseMatrix b = apply_sym_perm(a, p);
    const Permutation q = Permutation::from_forward(
        std::vector<std::uint32_t>(p.inverse().begin(), p.inverse().end()));
    CHECK(apply_sym_perm(b, q) == a);
  }
  SUBCASE("size mismatch") {
    CHECK_THROWS_AS(apply_sym_perm(a, Permutation::identity(4)),
                    DimensionError);
    CHECK_THROWS_AS(apply_sym_perm(DenseMatrix(2, 3), Permutation::identity(2)),
                    DimensionError);
  }
}

TEST_CASE("bandwidth measures the widest thresholded diagonal offset") {
  DenseMatrix a(5, 5);
  for (std::size_t i = 0; i < 5; ++i) a(i, i) = 1.0f;
  CHECK(bandwidth(a, 0.0f) == 0);
  CHECK(bandwidth(test::tridiagonal(5, 2.0f, 1.0f), 0.5f) == 1);
  a(0, 4) = 0.4f;
  CHECK(bandwidth(a, 0.5f) == 0);
  CHECK(bandwidth(a, 0.1f) == 4);
  CHECK(bandwidth(DenseMatrix(3, 3), 0.0f) == 0);
  CHECK_THROWS_AS(bandwidth(DenseMatrix(2, 3), 0.0f), DimensionError);
}
