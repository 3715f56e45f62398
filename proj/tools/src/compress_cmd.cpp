// Copyright 2026 the hslr authors
// SPDX-License-Identifier: Apache-2.0

#include <cstdint>
#include <iostream>
#include <memory>
#include <string>

#include <json.hpp>

#include "commands.hpp"
#include "hslr/errors.hpp"
#include "hslr/matrix_io.hpp"
#include "hslr/metrics.hpp"
#include "hslr/model.hpp"
#include "hslr/model_io.hpp"
#include "util.hpp"

namespace hslr::cli {

namespace {

struct CompressOpts {
  std::string input;
  std::string output;
  std::string method = "shss";
  double p = 0.0;
  std::size_t rank = 1;
  std::size_t depth = 1;
  std::size_t oversample = 8;
  std::size_t power_iters = 2;
  float eps = 1e-6f;
  std::uint64_t seed = 0;
  float spike_threshold = 0.0f;
  bool use_threshold = false;
  std::string dtype = "f32";
};

void run_compress(const CompressOpts& opts) {
  const auto method = parse_method(opts.method);
  if (!method) {
    throw ParamError("unknown method \"" + opts.method + "\"");
  }
  ModelParams params;
  params.p = opts.p;
  params.rank = opts.rank;
  params.depth = opts.depth;
  params.oversample = opts.oversample;
  params.power_iters = opts.power_iters;
  params.eps = opts.eps;
  params.seed = RngSeed{opts.seed};
  if (opts.use_threshold) {
    params.spike_rule = SpikeRule::Threshold;
    params.spike_threshold = opts.spike_threshold;
  }

  const DenseMatrix w = load_matrix(opts.input);
  const Model model = compress(w, *method, params);
  save_model(model, opts.output, parse_dtype(opts.dtype));

  const StorageReport storage = storage_count(model);
  const ErrorReport err = error_report(w, densify(model));

  nlohmann::ordered_json report;
  report["method"] = method_name(*method);
  report["p"] = params.p;
  report["rank"] = params.rank;
  report["depth"] = params.depth;
  report["stored_values"] = storage.stored_values;
  report["index_overhead"] = storage.index_overhead;
  report["compression_ratio"] = storage.compression_ratio;
  report["frobenius_abs"] = err.frobenius_abs;
  report["frobenius_rel"] = err.frobenius_rel;
  report["max_abs"] = err.max_abs;
  std::cout << report.dump() << "\n";
}

} // namespace

void register_compress(CLI::App& app) {
  auto opts = std::make_shared<CompressOpts>();
  CLI::App* cmd = app.add_subcommand(
      "compress", "Compress a matrix file into a serialized model");
  cmd->add_option("input", opts->input, "Input matrix (HSLR binary or CSV)")
      ->required();
  cmd->add_option("output", opts->output, "Output model path")->required();
  cmd->add_option("--method", opts->method,
                  "svd | rsvd | ssvd | srsvd | shss | shss-rcm")
      ->capture_default_str();
  cmd->add_option("--p", opts->p, "Spike percentage in [0, 100]")
      ->capture_default_str();
  cmd->add_option("--rank", opts->rank, "Target rank")->capture_default_str();
  cmd->add_option("--depth", opts->depth, "Recursion depth (hierarchical)")
      ->capture_default_str();
  cmd->add_option("--eps", opts->eps, "Singular value drop tolerance")
      ->capture_default_str();
  cmd->add_option("--oversample", opts->oversample,
                  "Sketch oversampling (randomized methods)")
      ->capture_default_str();
  cmd->add_option("--power-iters", opts->power_iters,
                  "Power iterations (randomized methods)")
      ->capture_default_str();
  cmd->add_option("--seed", opts->seed, "Random seed")->capture_default_str();
  cmd->add_option("--spike-threshold", opts->spike_threshold,
                  "Keep spikes by magnitude threshold instead of percentage");
  cmd->add_option("--dtype", opts->dtype, "Stored value type: f32 | f16")
      ->capture_default_str();
  cmd->callback([opts, cmd] {
    opts->use_threshold = cmd->count("--spike-threshold") > 0;
    run_compress(*opts);
  });
}

} // namespace hslr::cli
