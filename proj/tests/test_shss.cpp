// Copyright 2026 the hslr authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hslr/errors.hpp"
#include "hslr/hss.hpp"
#include "hslr/metrics.hpp"
#include "hslr/rcm.hpp"
#include "hslr/rng.hpp"
#include "hslr/shss.hpp"
#include "oracles.hpp"

using namespace hslr;

namespace {

void check_same_tree(const HssNode& h, const ShssNode& s) {
  CHECK(h.dim == s.dim);
  CHECK(h.split == s.split);
  CHECK(h.rank_at_level == s.rank_at_level);
  CHECK(h.depth == s.depth);
  REQUIRE(h.is_leaf() == s.is_leaf());
  if (h.is_leaf()) {
    CHECK(test::bits_equal(h.dense, s.dense));
    return;
  }
  CHECK(s.spikes.nnz() == 0);
  CHECK(!s.perm.has_value());
  CHECK(test::bits_equal(h.off01.u, s.off01.u));
  CHECK(test::bits_equal(h.off01.r, s.off01.r));
  CHECK(test::bits_equal(h.off10.u, s.off10.u));
  CHECK(test::bits_equal(h.off10.r, s.off10.r));
  check_same_tree(*h.child0, *s.child0);
  check_same_tree(*h.child1, *s.child1);
}

void paste(DenseMatrix& out, const DenseMatrix& block, std::size_t r0,
           std::size_t c0) {
  for (std::size_t i = 0; i < block.rows(); ++i) {
    for (std::size_t j = 0; j < block.cols(); ++j) {
      out(r0 + i, c0 + j) = block(i, j);
    }
  }
}

// Tridiagonal base with five large off-band entries implanted.
DenseMatrix banded_with_spikes() {
  DenseMatrix w = test::tridiagonal(16, 2.0f, 1.0f);
  w(0, 9) = 10.0f;
  w(3, 12) = -10.0f;
  w(7, 14) = 10.0f;
  w(11, 2) = -10.0f;
  w(15, 5) = 10.0f;
  return w;
}

ShssConfig base_config(double p, std::size_t k, std::size_t depth,
                       bool use_rcm, std::uint64_t seed) {
  ShssConfig cfg;
  cfg.p = p;
  cfg.k = k;
  cfg.depth = depth;
  cfg.eps = 1e-6f;
  cfg.use_rcm = use_rcm;
  cfg.seed = RngSeed{seed};
  return cfg;
}

} // namespace

TEST_CASE("shss at p=100 and depth 1 stores the matrix in its spikes") {
  const DenseMatrix w = gaussian_matrix(8, 8, RngSeed{51});
  const ShssModel m = shss_compress(w, 100.0, 2, 1, 1e-6f, false, RngSeed{52});
  CHECK(m.root.spikes.nnz() == 64);
  CHECK(m.root.off01.rank() == 0);
  CHECK(m.root.off10.rank() == 0);
  CHECK(densify_shss(m) == w);
  const std::vector<float> x = test::random_vector(8, 53);
  CHECK(test::rel_vec_err(shss_matvec(m, x),
                          test::dense_matvec_oracle(w, x)) < 1e-6);
}

TEST_CASE("shss at p=0 without reordering reproduces hss bit for bit") {
  const DenseMatrix w = gaussian_matrix(24, 24, RngSeed{55});
  const HssTree t =
      hss_compress(w, 1e-6f, 4, 3, FactorMethod::Rsvd, 8, 2, RngSeed{56});
  const ShssModel m = shss_compress(w, 0.0, 4, 3, 1e-6f, false, RngSeed{56});
  check_same_tree(t.root, m.root);
  CHECK(densify(t) == densify_shss(m));
  const std::vector<float> x = test::random_vector(24, 57);
  OpCount hss_ops;
  OpCount shss_ops;
  const std::vector<float> y0 = hss_matvec(t, x, &hss_ops);
  const std::vector<float> y1 = shss_matvec(m, x, &shss_ops);
  for (std::size_t i = 0; i < y0.size(); ++i) CHECK(y0[i] == y1[i]);
  CHECK(hss_ops.multiply_adds == shss_ops.multiply_adds);
}

TEST_CASE("spikes are selected before reordering, in block coordinates") {
  const DenseMatrix w = banded_with_spikes();
  // 5 of 256 entries is p = 1.953125; the implanted entries dominate.
  const std::vector<SparseEntry> expected = {{0, 9, 10.0f},
                                             {3, 12, -10.0f},
                                             {7, 14, 10.0f},
                                             {11, 2, -10.0f},
                                             {15, 5, 10.0f}};
  for (bool use_rcm : {false, true}) {
    CAPTURE(use_rcm);
    const ShssModel m =
        shss_compress(w, base_config(1.953125, 3, 2, use_rcm, 58));
    const auto got = m.root.spikes.entries();
    REQUIRE(got.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
      CHECK(got[i] == expected[i]);
    }
    CHECK(m.root.perm.has_value() == use_rcm);
    const DenseMatrix d = densify_shss(m);
    const std::vector<float> x = test::random_vector(16, 59);
    CHECK(test::rel_vec_err(shss_matvec(m, x),
                            test::dense_matvec_oracle(d, x)) < 1e-5);
  }
}

TEST_CASE("densify matches the explicit permutation sandwich at depth 1") {
  const DenseMatrix w = apply_sym_perm(
      banded_with_spikes(),
      Permutation::from_forward(test::random_forward(16, 61)));
  const ShssModel m = shss_compress(w, base_config(1.953125, 2, 1, true, 62));
  const ShssNode& root = m.root;
  REQUIRE(root.perm.has_value());
  const std::size_t s = root.split;

  DenseMatrix assembled(16, 16);
  paste(assembled, root.child0->dense, 0, 0);
  paste(assembled, root.child1->dense, s, s);
  paste(assembled, densify(root.off01), 0, s);
  paste(assembled, densify(root.off10), s, 0);

  // assembled lives in the permuted ordering; map it back and re-add the
  // spikes to reproduce the model's reconstruction.
  const auto fwd = root.perm->forward();
  DenseMatrix expected(16, 16);
  for (std::size_t i = 0; i < 16; ++i) {
    for (std::size_t j = 0; j < 16; ++j) {
      expected(fwd[i], fwd[j]) = assembled(i, j);
    }
  }
  for (const SparseEntry& e : root.spikes.entries()) {
    expected(e.row, e.col) += e.value;
  }
  CHECK(test::frob_diff_oracle(expected, densify_shss(m)) == 0.0);
}

TEST_CASE("reordering restores bandwidth at the top level") {
  const DenseMatrix w = apply_sym_perm(
      test::tridiagonal(16, 2.0f, 1.0f),
      Permutation::from_forward(test::random_forward(16, 63)));
  const ShssModel m = shss_compress(w, base_config(0.0, 2, 1, true, 64));
  REQUIRE(m.root.perm.has_value());
  const DenseMatrix reordered = apply_sym_perm(w, *m.root.perm);
  CHECK(bandwidth(reordered, 0.5f) == 1);
  CHECK(bandwidth(reordered, 0.5f) <= bandwidth(w, 0.5f));
}

TEST_CASE("stored values shrink as depth grows") {
  const DenseMatrix w = gaussian_matrix(128, 128, RngSeed{65});
  std::vector<std::size_t> stored;
  for (std::size_t depth : {1u, 2u, 3u}) {
    const ShssModel m = shss_compress(w, base_config(0.0, 16, depth, false, 66));
    stored.push_back(storage_count(m).stored_values);
  }
  // Leaves halve in area faster than the factor terms grow.
  CHECK(stored == std::vector<std::size_t>{12288, 10240, 9216});
}

TEST_CASE("percent rule counts per block") {
  const DenseMatrix w = gaussian_matrix(8, 8, RngSeed{67});
  const ShssModel m = shss_compress(w, 10.0, 2, 1, 1e-6f, false, RngSeed{68});
  // round(10% of 64) = 6 at the root; leaves carry no spikes.
  CHECK(m.root.spikes.nnz() == 6);
  CHECK(m.root.child0->spikes.nnz() == 0);
  CHECK(m.root.child1->spikes.nnz() == 0);
  const StorageReport report = storage_count(m);
  CHECK(report.index_overhead == 12);
}

TEST_CASE("threshold rule takes every entry at or over the cutoff") {
  DenseMatrix w = gaussian_matrix(8, 8, RngSeed{69});
  w(1, 6) = 10.0f;
  w(5, 2) = -12.0f;
  ShssConfig cfg = base_config(0.0, 2, 1, false, 70);
  cfg.spike_rule = SpikeRule::Threshold;
  cfg.spike_threshold = 5.0f;
  const ShssModel m = shss_compress(w, cfg);
  REQUIRE(m.root.spikes.nnz() == 2);
  CHECK(m.root.spikes.entries()[0] == SparseEntry{1, 6, 10.0f});
  CHECK(m.root.spikes.entries()[1] == SparseEntry{5, 2, -12.0f});
}

TEST_CASE("shss matvec agrees with the densified oracle") {
  const DenseMatrix w = gaussian_matrix(32, 32, RngSeed{71});
  for (bool use_rcm : {false, true}) {
    CAPTURE(use_rcm);
    const ShssModel m = shss_compress(w, base_config(15.0, 4, 2, use_rcm, 72));
    const DenseMatrix d = densify_shss(m);
    for (std::size_t j = 0; j < 32; j += 7) {
      std::vector<float> e(32, 0.0f);
      e[j] = 1.0f;
      CHECK(test::rel_vec_err(shss_matvec(m, e),
                              test::dense_matvec_oracle(d, e)) < 1e-5);
    }
    const std::vector<float> x = test::random_vector(32, 73);
    CHECK(test::rel_vec_err(shss_matvec(m, x),
                            test::dense_matvec_oracle(d, x)) < 1e-5);
    CHECK_THROWS_AS(shss_matvec(m, std::vector<float>(31)), DimensionError);
  }
}

TEST_CASE("config overload and convenience overload agree") {
  const DenseMatrix w = gaussian_matrix(16, 16, RngSeed{74});
  const ShssModel a = shss_compress(w, 12.5, 3, 2, 1e-5f, true, RngSeed{75});
  const ShssModel b = shss_compress(w, base_config(12.5, 3, 2, true, 75));
  ShssConfig cfg = base_config(12.5, 3, 2, true, 75);
  cfg.eps = 1e-5f;
  const ShssModel c = shss_compress(w, cfg);
  CHECK(densify_shss(a) == densify_shss(c));
  CHECK(a.config.eps == 1e-5f);
  CHECK(b.config.eps == 1e-6f);
}

TEST_CASE("shss_compress validation") {
  const DenseMatrix w = gaussian_matrix(16, 16, RngSeed{76});
  CHECK_THROWS_AS(shss_compress(w, -1.0, 2, 1, 1e-6f, false, RngSeed{}),
                  ParamError);
  CHECK_THROWS_AS(shss_compress(w, 101.0, 2, 1, 1e-6f, false, RngSeed{}),
                  ParamError);
  CHECK_THROWS_AS(shss_compress(w, 0.0, 0, 1, 1e-6f, false, RngSeed{}),
                  ParamError);
  CHECK_THROWS_AS(shss_compress(w, 0.0, 2, 0, 1e-6f, false, RngSeed{}),
                  ParamError);
  CHECK_THROWS_WITH_AS(shss_compress(w, 0.0, 2, 5, 1e-6f, false, RngSeed{}),
                       doctest::Contains("depth exceeds matrix size"),
                       ParamError);
  CHECK_THROWS_AS(shss_compress(DenseMatrix(4, 6), 0.0, 2, 1, 1e-6f, false,
                                RngSeed{}),
                  DimensionError);
  ShssConfig bad = base_config(0.0, 2, 1, false, 0);
  bad.spike_rule = SpikeRule::Threshold;
  bad.spike_threshold = 0.0f;
  CHECK_THROWS_AS(shss_compress(w, bad), ParamError);
}
