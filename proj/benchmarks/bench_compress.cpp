// Copyright 2026 the hslr authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <cstddef>

#include "hslr/dense_matrix.hpp"
#include "hslr/hss.hpp"
#include "hslr/rng.hpp"
#include "hslr/shss.hpp"
#include "hslr/slr.hpp"
#include "hslr/svd.hpp"

namespace {

using namespace hslr;

std::size_t depth_for(std::size_t n) {
  std::size_t depth = 0;
  while ((n >> depth) > 128) ++depth;
  return depth == 0 ? 1 : depth;
}

void BM_TruncatedSvd(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const DenseMatrix w = gaussian_matrix(n, n, RngSeed{51});
  for (auto _ : state) {
    SvdResult r = truncated_svd(w, 32);
    benchmark::DoNotOptimize(r.achieved_rank);
  }
}

void BM_RandomizedSvd(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const DenseMatrix w = gaussian_matrix(n, n, RngSeed{51});
  for (auto _ : state) {
    SvdResult r = randomized_svd(w, 32, 8, 2, 1e-6f, RngSeed{52});
    benchmark::DoNotOptimize(r.achieved_rank);
  }
}

void BM_SparsePlusRsvd(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const DenseMatrix w = gaussian_matrix(n, n, RngSeed{51});
  for (auto _ : state) {
    SparseLowRank m = sparse_plus_rsvd(w, 10.0, 32, 8, 2, 1e-6f, RngSeed{52});
    benchmark::DoNotOptimize(m.spikes.nnz());
  }
}

void BM_HssCompress(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const DenseMatrix w = gaussian_matrix(n, n, RngSeed{51});
  const std::size_t depth = depth_for(n);
  for (auto _ : state) {
    HssTree t = hss_compress(w, 1e-6f, 32, depth);
    benchmark::DoNotOptimize(t.root.dim);
  }
}

void BM_ShssCompress(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const DenseMatrix w = gaussian_matrix(n, n, RngSeed{51});
  const std::size_t depth = depth_for(n);
  const bool use_rcm = state.range(1) != 0;
  for (auto _ : state) {
    ShssModel m = shss_compress(w, 10.0, 32, depth, 1e-6f, use_rcm, RngSeed{52});
    benchmark::DoNotOptimize(m.dim);
  }
}

BENCHMARK(BM_TruncatedSvd)->Arg(128)->Arg(256)->Arg(512);
BENCHMARK(BM_RandomizedSvd)->Arg(128)->Arg(256)->Arg(512)->Arg(1024);
BENCHMARK(BM_SparsePlusRsvd)->Arg(128)->Arg(256)->Arg(512)->Arg(1024);
BENCHMARK(BM_HssCompress)->Arg(256)->Arg(512)->Arg(1024);
BENCHMARK(BM_ShssCompress)
    ->Args({256, 0})
    ->Args({256, 1})
    ->Args({512, 0})
    ->Args({512, 1})
    ->Args({1024, 0})
    ->Args({1024, 1});

} // namespace

BENCHMARK_MAIN();
