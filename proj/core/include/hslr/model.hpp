// Copyright 2026 the hslr authors
// SPDX-License-Identifier: Apache-2.0

#ifndef HSLR_MODEL_HPP
#define HSLR_MODEL_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "hslr/dense_matrix.hpp"
#include "hslr/low_rank.hpp"
#include "hslr/metrics.hpp"
#include "hslr/op_count.hpp"
#include "hslr/shss.hpp"
#include "hslr/slr.hpp"
#include "hslr/svd.hpp"

namespace hslr {

/// The compression methods the toolchain exposes. Values are stable: they
/// appear in serialized model files.
enum class Method : std::uint8_t {
  Svd = 0,
  Rsvd = 1,
  Ssvd = 2,
  Srsvd = 3,
  Shss = 4,
  ShssRcm = 5,
};

/// Canonical lowercase name ("svd", ..., "shss-rcm").
std::string_view method_name(Method m);

/// Inverse of method_name; nullopt for unknown names.
std::optional<Method> parse_method(std::string_view name);

/// Union of every method's knobs; each method reads the subset it needs
/// (p only for spike methods, depth only for hierarchical ones, sketch
/// parameters only for randomized ones).
struct ModelParams {
  double p = 0.0;
  std::size_t rank = 1;
  std::size_t depth = 1;
  std::size_t oversample = 8;
  std::size_t power_iters = 2;
  float eps = 1e-6f;
  RngSeed seed;
  SpikeRule spike_rule = SpikeRule::Percent;
  float spike_threshold = 0.0f;

  bool operator==(const ModelParams&) const = default;
};

/// A compressed matrix of any method, with the parameters that built it.
/// svd/rsvd carry a bare factor, ssvd/srsvd a sparse-plus-factor pair,
/// shss/shss-rcm the recursive tree.
struct Model {
  Method method = Method::Svd;
  std::size_t rows = 0;
  std::size_t cols = 0;
  ModelParams params;
  std::variant<LowRankFactor, SparseLowRank, ShssModel> payload;
};

/// Checks that params satisfy the method's preconditions for a rows x cols
/// input, throwing ParamError otherwise. Pure: lets callers (notably the
/// sweep driver) reject a whole grid before any cell runs.
void validate_compress_params(std::size_t rows, std::size_t cols, Method method,
                              const ModelParams& params);

/// Builds a model by dispatching to the method's compressor. Validates
/// parameters against the input shape first (hierarchical methods require
/// square inputs and n >= 2^depth).
Model compress(const DenseMatrix& w, Method method, const ModelParams& params);

/// Structured matvec through whichever representation the model holds.
std::vector<float> model_matvec(const Model& m, std::span<const float> x,
                                OpCount* ops = nullptr);

/// Reconstruction oracle for error reporting.
DenseMatrix densify(const Model& m);

StorageReport storage_count(const Model& m);

} // namespace hslr

#endif // HSLR_MODEL_HPP
