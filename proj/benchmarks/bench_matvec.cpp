// Copyright 2026 the hslr authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <cstddef>
#include <random>
#include <vector>

#include "hslr/dense_matrix.hpp"
#include "hslr/hss.hpp"
#include "hslr/op_count.hpp"
#include "hslr/rng.hpp"
#include "hslr/shss.hpp"
#include "hslr/slr.hpp"

namespace {

using namespace hslr;

// Leaves stay at dimension 128 as the problem grows.
std::size_t depth_for(std::size_t n) {
  std::size_t depth = 0;
  while ((n >> depth) > 128) ++depth;
  return depth == 0 ? 1 : depth;
}

std::vector<float> random_vector(std::size_t n) {
  std::mt19937 gen(12345);
  std::normal_distribution<float> dist(0.0f, 1.0f);
  std::vector<float> x(n);
  for (float& v : x) v = dist(gen);
  return x;
}

void BM_DenseMatvec(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const DenseMatrix w = gaussian_matrix(n, n, RngSeed{41});
  const std::vector<float> x = random_vector(n);
  std::vector<float> y(n);
  for (auto _ : state) {
    for (std::size_t i = 0; i < n; ++i) {
      double acc = 0.0;
      for (std::size_t j = 0; j < n; ++j) acc += double(w(i, j)) * x[j];
      y[i] = static_cast<float>(acc);
    }
    benchmark::DoNotOptimize(y.data());
  }
  state.counters["madds"] = static_cast<double>(n * n);
}

void BM_SlrMatvec(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const DenseMatrix w = gaussian_matrix(n, n, RngSeed{41});
  const SparseLowRank m = sparse_plus_rsvd(w, 10.0, 32, 8, 2, 1e-6f, RngSeed{42});
  const std::vector<float> x = random_vector(n);
  OpCount ops;
  std::vector<float> y = slr_matvec(m, x, &ops);
  for (auto _ : state) {
    y = slr_matvec(m, x);
    benchmark::DoNotOptimize(y.data());
  }
  state.counters["madds"] = static_cast<double>(ops.multiply_adds);
}

void BM_HssMatvec(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const DenseMatrix w = gaussian_matrix(n, n, RngSeed{41});
  const HssTree t = hss_compress(w, 1e-6f, 32, depth_for(n));
  const std::vector<float> x = random_vector(n);
  OpCount ops;
  std::vector<float> y = hss_matvec(t, x, &ops);
  for (auto _ : state) {
    y = hss_matvec(t, x);
    benchmark::DoNotOptimize(y.data());
  }
  state.counters["madds"] = static_cast<double>(ops.multiply_adds);
}

void BM_ShssMatvec(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const DenseMatrix w = gaussian_matrix(n, n, RngSeed{41});
  const ShssModel m =
      shss_compress(w, 10.0, 32, depth_for(n), 1e-6f, true, RngSeed{42});
  const std::vector<float> x = random_vector(n);
  OpCount ops;
  std::vector<float> y = shss_matvec(m, x, &ops);
  for (auto _ : state) {
    y = shss_matvec(m, x);
    benchmark::DoNotOptimize(y.data());
  }
  state.counters["madds"] = static_cast<double>(ops.multiply_adds);
}

BENCHMARK(BM_DenseMatvec)->Arg(256)->Arg(512)->Arg(1024)->Arg(2048);
BENCHMARK(BM_SlrMatvec)->Arg(256)->Arg(512)->Arg(1024)->Arg(2048);
BENCHMARK(BM_HssMatvec)->Arg(256)->Arg(512)->Arg(1024)->Arg(2048);
BENCHMARK(BM_ShssMatvec)->Arg(256)->Arg(512)->Arg(1024)->Arg(2048);

} // namespace

BENCHMARK_MAIN();
