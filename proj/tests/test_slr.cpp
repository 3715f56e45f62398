// Copyright 2026 the hslr authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <vector>

#include "hslr/errors.hpp"
#include "hslr/rng.hpp"
#include "hslr/slr.hpp"
#include "hslr/svd.hpp"
#include "oracles.hpp"

using namespace hslr;

TEST_CASE("extract_top_p selects the single largest of four entries") {
  const DenseMatrix w(2, 2, {1, 2, 3, 4});
  const SpikeSplit split = extract_top_p(w, 25.0);
  REQUIRE(split.spikes.nnz() == 1);
  CHECK(split.spikes.entries()[0] == SparseEntry{1, 1, 4.0f});
  CHECK(split.residual == DenseMatrix(2, 2, {1, 2, 3, 0}));
}

TEST_CASE("extract_top_p degenerate percentages") {
  const DenseMatrix w = gaussian_matrix(5, 7, RngSeed{11});
  SUBCASE("p=0 keeps nothing") {
    const SpikeSplit split = extract_top_p(w, 0.0);
    CHECK(split.spikes.nnz() == 0);
    CHECK(split.residual == w);
  }
  SUBCASE("p=100 keeps everything") {
    const SpikeSplit split = extract_top_p(w, 100.0);
    CHECK(densify(split.spikes) == w);
    for (float v : split.residual.values()) CHECK(v == 0.0f);
  }
  SUBCASE("p out of range") {
    CHECK_THROWS_AS(extract_top_p(w, -1.0), ParamError);
    CHECK_THROWS_AS(extract_top_p(w, 100.5), ParamError);
  }
}

TEST_CASE("extract_top_p count matches the rounding rule") {
  const DenseMatrix w = gaussian_matrix(7, 9, RngSeed{13});
  for (double p : {1.0, 10.0, 33.3, 50.0, 99.0}) {
    const SpikeSplit split = extract_top_p(w, p);
    const auto expected =
        static_cast<std::size_t>(std::llround(p / 100.0 * 63.0));
    CHECK(split.spikes.nnz() == expected);
  }
}

TEST_CASE("extract_top_p breaks magnitude ties by position") {
  // All magnitudes equal; the first entries in row-major order win.
  const DenseMatrix w(2, 3, {1, -1, 1, -1, 1, -1});
  const SpikeSplit split = extract_top_p(w, 50.0);
  REQUIRE(split.spikes.nnz() == 3);
  CHECK(split.spikes.entries()[0] == SparseEntry{0, 0, 1.0f});
  CHECK(split.spikes.entries()[1] == SparseEntry{0, 1, -1.0f});
  CHECK(split.spikes.entries()[2] == SparseEntry{0, 2, 1.0f});
}

TEST_CASE("spike selection dominates the residual and is disjoint from it") {
  const DenseMatrix w = gaussian_matrix(12, 12, RngSeed{17});
  const SpikeSplit split = extract_top_p(w, 20.0);
  float smallest_spike = 1e30f;
  for (const SparseEntry& e : split.spikes.entries()) {
    smallest_spike = std::min(smallest_spike, std::abs(e.value));
    CHECK(split.residual(e.row, e.col) == 0.0f);
    CHECK(e.value == w(e.row, e.col));
  }
  for (float v : split.residual.values()) {
    CHECK(std::abs(v) <= smallest_spike);
  }
}

TEST_CASE("residual norm is non-increasing in p") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const DenseMatrix w = gaussian_matrix(16, 16, RngSeed{100 + seed});
    double prev = 1e300;
    for (double p : {0.0, 10.0, 20.0, 30.0, 100.0}) {
      const double norm = test::frob_oracle(extract_top_p(w, p).residual);
      CHECK(norm <= prev + 1e-9);
      prev = norm;
    }
  }
}

TEST_CASE("extract_above keeps entries at or over the threshold") {
  const DenseMatrix w(2, 2, {0.5f, -2.0f, 2.0f, 1.0f});
  const SpikeSplit split = extract_above(w, 2.0f);
  CHECK(split.spikes.nnz() == 2);
  CHECK(split.residual == DenseMatrix(2, 2, {0.5f, 0, 0, 1.0f}));
  CHECK_THROWS_AS(extract_above(w, 0.0f), ParamError);
  CHECK_THROWS_AS(extract_above(w, -1.0f), ParamError);
}

TEST_CASE("sparse_plus_svd captures planted spikes plus a rank-1 term") {
  // Two huge entries sit in row 0, where the rank-1 term vanishes, so
  // removing them leaves exactly a rank-1 residual: two spikes and one
  // singular triplet reconstruct the matrix.
  DenseMatrix w(4, 4);
  const float u[4] = {0.0f, 1.0f, -2.0f, 0.5f};
  const float v[4] = {0.8f, -0.6f, 1.0f, 0.3f};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      w(i, j) = u[i] * v[j];
    }
  }
  w(0, 0) = 100.0f;
  w(0, 2) = -100.0f;
  const SparseLowRank m = sparse_plus_svd(w, 12.5, 1);
  REQUIRE(m.spikes.nnz() == 2);
  CHECK(m.spikes.entries()[0] == SparseEntry{0, 0, 100.0f});
  CHECK(m.spikes.entries()[1] == SparseEntry{0, 2, -100.0f});
  CHECK(test::frob_diff_oracle(w, densify(m)) < 1e-5);
  CHECK(m.method == SlrMethod::Ssvd);
  CHECK(m.params.p == 12.5);
}

TEST_CASE("sparse_plus_svd at p=0 reduces to the truncated svd") {
  const DenseMatrix w = gaussian_matrix(10, 8, RngSeed{23});
  const SparseLowRank m = sparse_plus_svd(w, 0.0, 3);
  CHECK(m.spikes.nnz() == 0);
  const LowRankFactor f = to_factor(truncated_svd(w, 3));
  CHECK(test::bits_equal(m.factor.u, f.u));
  CHECK(test::bits_equal(m.factor.r, f.r));
}

TEST_CASE("sparse_plus_svd at p=100 is exact with an empty factor") {
  const DenseMatrix w = gaussian_matrix(6, 6, RngSeed{29});
  const SparseLowRank m = sparse_plus_svd(w, 100.0, 2);
  CHECK(m.factor.rank() == 0);
  CHECK(test::frob_diff_oracle(w, densify(m)) == 0.0);
}

TEST_CASE("sparse_plus_rsvd determinism and exact degenerate case") {
  const DenseMatrix w = gaussian_matrix(12, 12, RngSeed{31});
  const SparseLowRank a = sparse_plus_rsvd(w, 20.0, 3, 4, 1, 1e-6f, RngSeed{7});
  const SparseLowRank b = sparse_plus_rsvd(w, 20.0, 3, 4, 1, 1e-6f, RngSeed{7});
  CHECK(test::bits_equal(a.factor.u, b.factor.u));
  CHECK(test::bits_equal(a.factor.r, b.factor.r));
  CHECK(a.spikes == b.spikes);
  CHECK(a.method == SlrMethod::Srsvd);

  const SparseLowRank full = sparse_plus_rsvd(w, 100.0, 2, 2, 0, 1e-6f,
                                              RngSeed{9});
  CHECK(test::frob_diff_oracle(w, densify(full)) == 0.0);
}

TEST_CASE("sparse_plus_rsvd tracks sparse_plus_svd within the test bound") {
  const DenseMatrix w = gaussian_matrix(64, 64, RngSeed{37});
  const double exact =
      test::frob_diff_oracle(w, densify(sparse_plus_svd(w, 20.0, 8)));
  const double sketched = test::frob_diff_oracle(
      w, densify(sparse_plus_rsvd(w, 20.0, 8, 8, 2, 1e-6f, RngSeed{38})));
  CHECK(sketched <= 1.5 * exact);
}

TEST_CASE("slr_matvec agrees with the densify oracle") {
  const DenseMatrix w = gaussian_matrix(9, 9, RngSeed{41});
  const SparseLowRank m = sparse_plus_svd(w, 15.0, 4);
  const DenseMatrix d = densify(m);

  SUBCASE("zero maps to zero") {
    const std::vector<float> zero(9, 0.0f);
    for (float v : slr_matvec(m, zero)) CHECK(v == 0.0f);
  }
  SUBCASE("basis vectors give the columns") {
    for (std::size_t j = 0; j < 9; ++j) {
      std::vector<float> e(9, 0.0f);
      e[j] = 1.0f;
      CHECK(test::rel_vec_err(slr_matvec(m, e),
                              test::dense_matvec_oracle(d, e)) < 1e-6);
    }
  }
  SUBCASE("random vectors match") {
    const std::vector<float> x = test::random_vector(9, 43);
    CHECK(test::rel_vec_err(slr_matvec(m, x),
                            test::dense_matvec_oracle(d, x)) < 1e-6);
  }
  SUBCASE("length mismatch") {
    CHECK_THROWS_AS(slr_matvec(m, std::vector<float>(8)), DimensionError);
  }
}
