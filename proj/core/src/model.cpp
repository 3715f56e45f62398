// Copyright 2026 the hslr authors
// SPDX-License-Identifier: Apache-2.0

#include "hslr/model.hpp"

#include <string>

#include "hslr/errors.hpp"

namespace hslr {

std::string_view method_name(Method m) {
  switch (m) {
    case Method::Svd: return "svd";
    case Method::Rsvd: return "rsvd";
    case Method::Ssvd: return "ssvd";
    case Method::Srsvd: return "srsvd";
    case Method::Shss: return "shss";
    case Method::ShssRcm: return "shss-rcm";
  }
  throw ParamError("unknown method code");
}

std::optional<Method> parse_method(std::string_view name) {
  if (name == "svd") return Method::Svd;
  if (name == "rsvd") return Method::Rsvd;
  if (name == "ssvd") return Method::Ssvd;
  if (name == "srsvd") return Method::Srsvd;
  if (name == "shss") return Method::Shss;
  if (name == "shss-rcm") return Method::ShssRcm;
  return std::nullopt;
}

void validate_compress_params(std::size_t rows, std::size_t cols, Method method,
                              const ModelParams& params) {
  if (rows == 0 || cols == 0) {
    throw ParamError("input matrix must be non-empty");
  }
  if (!(params.eps >= 0.0f)) {
    throw ParamError("eps must be nonnegative");
  }
  if (params.rank < 1) {
    throw ParamError("rank must be at least 1");
  }
  const std::size_t mn = rows < cols ? rows : cols;
  switch (method) {
    case Method::Svd:
      if (params.rank > mn) {
        throw ParamError("rank must lie in [1, min(rows, cols)]");
      }
      break;
    case Method::Rsvd:
      if (params.rank + params.oversample > mn) {
        throw ParamError("rank plus oversample must not exceed min(rows, cols)");
      }
      break;
    case Method::Ssvd:
    case Method::Srsvd:
      if (!(params.p >= 0.0 && params.p <= 100.0)) {
        throw ParamError("spike percentage must lie in [0, 100]");
      }
      if (params.rank > mn) {
        throw ParamError("rank must lie in [1, min(rows, cols)]");
      }
      if (method == Method::Srsvd && params.rank + params.oversample > mn) {
        throw ParamError("rank plus oversample must not exceed min(rows, cols)");
      }
      break;
    case Method::Shss:
    case Method::ShssRcm:
      if (rows != cols) {
        throw ParamError("hierarchical compression needs a square matrix");
      }
      if (params.depth < 1) {
        throw ParamError("depth must be at least 1");
      }
      if (params.depth >= 64 || rows < (std::size_t{1} << params.depth)) {
        throw ParamError(
            "depth exceeds matrix size: need n >= 2^depth, have depth = " +
            std::to_string(params.depth) + ", n = " + std::to_string(rows));
      }
      if (params.spike_rule == SpikeRule::Percent &&
          !(params.p >= 0.0 && params.p <= 100.0)) {
        throw ParamError("spike percentage must lie in [0, 100]");
      }
      break;
  }
}

namespace {

ShssConfig to_shss_config(const ModelParams& p, bool use_rcm) {
  ShssConfig config;
  config.p = p.p;
  config.spike_threshold = p.spike_threshold;
  config.spike_rule = p.spike_rule;
  config.k = p.rank;
  config.depth = p.depth;
  config.eps = p.eps;
  config.use_rcm = use_rcm;
  config.method = FactorMethod::Rsvd;
  config.oversample = p.oversample;
  config.power_iters = p.power_iters;
  config.seed = p.seed;
  return config;
}

} // namespace

Model compress(const DenseMatrix& w, Method method, const ModelParams& params) {
  validate_compress_params(w.rows(), w.cols(), method, params);
  Model model;
  model.method = method;
  model.rows = w.rows();
  model.cols = w.cols();
  model.params = params;
  switch (method) {
    case Method::Svd:
      model.payload = to_factor(truncated_svd(w, params.rank, params.eps));
      break;
    case Method::Rsvd:
      model.payload = to_factor(randomized_svd(
          w, params.rank, params.oversample, params.power_iters, params.eps,
          params.seed));
      break;
    case Method::Ssvd:
      model.payload = sparse_plus_svd(w, params.p, params.rank, params.eps);
      break;
    case Method::Srsvd:
      model.payload =
          sparse_plus_rsvd(w, params.p, params.rank, params.oversample,
                           params.power_iters, params.eps, params.seed);
      break;
    case Method::Shss:
      model.payload = shss_compress(w, to_shss_config(params, false));
      break;
    case Method::ShssRcm:
      model.payload = shss_compress(w, to_shss_config(params, true));
      break;
  }
  return model;
}

std::vector<float> model_matvec(const Model& m, std::span<const float> x,
                                OpCount* ops) {
  if (const auto* f = std::get_if<LowRankFactor>(&m.payload)) {
    return apply(*f, x, ops);
  }
  if (const auto* slr = std::get_if<SparseLowRank>(&m.payload)) {
    return slr_matvec(*slr, x, ops);
  }
  return shss_matvec(std::get<ShssModel>(m.payload), x, ops);
}

DenseMatrix densify(const Model& m) {
  if (const auto* f = std::get_if<LowRankFactor>(&m.payload)) {
    return densify(*f);
  }
  if (const auto* slr = std::get_if<SparseLowRank>(&m.payload)) {
    return densify(*slr);
  }
  return densify_shss(std::get<ShssModel>(m.payload));
}

StorageReport storage_count(const Model& m) {
  if (const auto* f = std::get_if<LowRankFactor>(&m.payload)) {
    return storage_count(*f);
  }
  if (const auto* slr = std::get_if<SparseLowRank>(&m.payload)) {
    return storage_count(*slr);
  }
  return storage_count(std::get<ShssModel>(m.payload));
}

} // namespace hslr
