// Copyright 2026 the hslr authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "commands.hpp"
#include "hslr/errors.hpp"
#include "hslr/matrix_io.hpp"
#include "hslr/model.hpp"
#include "hslr/model_io.hpp"
#include "util.hpp"

namespace hslr::cli {

namespace {

struct MatvecOpts {
  std::string model;
  std::string vector;
  std::string output;
  std::string check_dense;
};

void run_matvec(const MatvecOpts& opts) {
  const Model model = load_model(opts.model);
  const std::vector<float> x = read_vector(opts.vector);
  const std::vector<float> y = model_matvec(model, x);
  write_vector(y, opts.output);

  if (opts.check_dense.empty()) return;
  const DenseMatrix w = load_matrix(opts.check_dense);
  if (w.rows() != model.rows || w.cols() != model.cols) {
    throw DimensionError("dense reference is " + std::to_string(w.rows()) +
                         "x" + std::to_string(w.cols()) + "; model is " +
                         std::to_string(model.rows) + "x" +
                         std::to_string(model.cols));
  }
  const std::vector<float> ref = matvec(w, x);
  double diff2 = 0.0;
  double ref2 = 0.0;
  for (std::size_t i = 0; i < ref.size(); ++i) {
    const double d = static_cast<double>(y[i]) - static_cast<double>(ref[i]);
    diff2 += d * d;
    ref2 += static_cast<double>(ref[i]) * static_cast<double>(ref[i]);
  }
  const double abs_err = std::sqrt(diff2);
  const double ref_norm = std::sqrt(ref2);
  nlohmann::ordered_json report;
  report["relative_error"] = ref_norm < 1e-12 ? abs_err : abs_err / ref_norm;
  std::cout << report.dump() << "\n";
}

} // namespace

void register_matvec(CLI::App& app) {
  auto opts = std::make_shared<MatvecOpts>();
  CLI::App* cmd = app.add_subcommand(
      "matvec", "Multiply a compressed model by a vector");
  cmd->add_option("model", opts->model, "Serialized model path")->required();
  cmd->add_option("vector", opts->vector,
                  "Input vector (matrix file with one row or column)")
      ->required();
  cmd->add_option("output", opts->output, "Output vector path (text)")
      ->required();
  cmd->add_option("--check-dense", opts->check_dense,
                  "Dense matrix file to compare against; prints the relative "
                  "error as JSON");
  cmd->callback([opts] { run_matvec(*opts); });
}

} // namespace hslr::cli
