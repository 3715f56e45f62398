// Copyright 2026 the hslr authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cstdint>

#include "hslr/errors.hpp"
#include "hslr/metrics.hpp"
#include "hslr/rng.hpp"
#include "hslr/slr.hpp"
#include "hslr/svd.hpp"
#include "oracles.hpp"

using namespace hslr;

namespace {

// Independent bookkeeping pass over the public node fields, written
// against the storage definition rather than the library's traversal.
void walk(const ShssNode& node, std::uint64_t& values, std::uint64_t& indices) {
  if (node.is_leaf()) {
    values += static_cast<std::uint64_t>(node.dense.rows()) * node.dense.cols();
    return;
  }
  values += node.spikes.nnz();
  indices += 2 * static_cast<std::uint64_t>(node.spikes.nnz());
  if (node.perm.has_value()) indices += node.perm->size();
  for (const LowRankFactor* f : {&node.off01, &node.off10}) {
    values += static_cast<std::uint64_t>(f->u.rows()) * f->u.cols();
    values += static_cast<std::uint64_t>(f->r.rows()) * f->r.cols();
  }
  walk(*node.child0, values, indices);
  walk(*node.child1, values, indices);
}

} // namespace

TEST_CASE("low-rank factor storage and ratio") {
  const DenseMatrix w = gaussian_matrix(1024, 1024, RngSeed{81});
  const LowRankFactor f =
      to_factor(randomized_svd(w, 64, 8, 1, 1e-6f, RngSeed{82}));
  const StorageReport r = storage_count(f);
  CHECK(r.dense_params == 1024 * 1024);
  CHECK(r.stored_values == 2 * 1024 * 64);
  CHECK(r.index_overhead == 0);
  CHECK(r.compression_ratio == 8.0);
}

TEST_CASE("empty factor reports the zero-ratio sentinel") {
  const LowRankFactor f = to_factor(truncated_svd(DenseMatrix(4, 4), 2));
  CHECK(f.rank() == 0);
  const StorageReport r = storage_count(f);
  CHECK(r.stored_values == 0);
  CHECK(r.compression_ratio == 0.0);
}

TEST_CASE("sparse-plus-low-rank storage counts spikes and coordinates") {
  const DenseMatrix w = gaussian_matrix(20, 20, RngSeed{83});
  const SparseLowRank m = sparse_plus_svd(w, 10.0, 4);
  const StorageReport r = storage_count(m);
  CHECK(m.spikes.nnz() == 40); // round(10% of 400)
  CHECK(r.stored_values == 40 + 2 * 20 * 4);
  CHECK(r.index_overhead == 80);

  const SparseLowRank plain = sparse_plus_svd(w, 0.0, 4);
  const StorageReport r0 = storage_count(plain);
  CHECK(r0.stored_values == 2 * 20 * 4);
  CHECK(r0.index_overhead == 0);
  CHECK(r0.compression_ratio == 400.0 / 160.0);
}

TEST_CASE("hierarchical storage agrees with an independent walk") {
  const DenseMatrix w = gaussian_matrix(256, 256, RngSeed{85});
  for (bool use_rcm : {false, true}) {
    CAPTURE(use_rcm);
    ShssConfig cfg;
    cfg.p = 10.0;
    cfg.k = 16;
    cfg.depth = 2;
    cfg.eps = 1e-6f;
    cfg.use_rcm = use_rcm;
    cfg.seed = RngSeed{86};
    const ShssModel m = shss_compress(w, cfg);
    std::uint64_t values = 0;
    std::uint64_t indices = 0;
    walk(m.root, values, indices);
    const StorageReport r = storage_count(m);
    CHECK(r.stored_values == values);
    CHECK(r.index_overhead == indices);
    CHECK(r.dense_params == 256 * 256);
    CHECK(r.compression_ratio ==
          static_cast<double>(r.dense_params) / static_cast<double>(values));
    // The permutations change only the index overhead, never the values.
    if (use_rcm) CHECK(indices > 2 * 6554);
  }
}

TEST_CASE("hss storage has no index overhead") {
  const DenseMatrix w = gaussian_matrix(64, 64, RngSeed{87});
  const HssTree t = hss_compress(w, 1e-6f, 8, 2);
  const StorageReport r = storage_count(t);
  CHECK(r.index_overhead == 0);
  // 4 leaves of 16x16, rank-8 factors at level 0, rank-4 at level 1.
  CHECK(r.stored_values == 4 * 256 + 2 * (32 * 8 + 8 * 32) + 4 * (16 * 4 + 4 * 16));
}

TEST_CASE("error report of an exact model is zero") {
  const DenseMatrix w = gaussian_matrix(10, 10, RngSeed{89});
  const SparseLowRank m = sparse_plus_svd(w, 100.0, 1);
  const ErrorReport r = error_report(w, m);
  CHECK(r.frobenius_abs == 0.0);
  CHECK(r.frobenius_rel == 0.0);
  CHECK(r.max_abs == 0.0);
  CHECK(!r.rel_is_abs);
}

TEST_CASE("error report matches the singular value tail") {
  const DenseMatrix w = gaussian_matrix(12, 10, RngSeed{91});
  const LowRankFactor f = to_factor(truncated_svd(w, 3, 0.0f));
  const ErrorReport r = error_report(w, f);
  const double tail = test::tail_rss(test::singular_values_oracle(w), 3);
  CHECK(r.frobenius_abs == doctest::Approx(tail).epsilon(1e-4));
  CHECK(r.frobenius_rel ==
        doctest::Approx(tail / test::frob_oracle(w)).epsilon(1e-4));
  CHECK(r.max_abs > 0.0);
  CHECK(r.max_abs <= r.frobenius_abs + 1e-12);
}

TEST_CASE("zero input switches the relative error to absolute") {
  const DenseMatrix w(3, 3);
  DenseMatrix approx(3, 3);
  approx(1, 1) = 0.5f;
  const ErrorReport r = error_report(w, approx);
  CHECK(r.rel_is_abs);
  CHECK(r.frobenius_rel == r.frobenius_abs);
  CHECK(r.frobenius_abs == 0.5);
  CHECK(r.max_abs == 0.5);
}

TEST_CASE("error report rejects shape mismatches") {
  CHECK_THROWS_AS(error_report(DenseMatrix(2, 3), DenseMatrix(3, 2)),
                  DimensionError);
}
