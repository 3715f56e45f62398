// Copyright 2026 the hslr authors
// SPDX-License-Identifier: Apache-2.0

#include <atomic>
#include <charconv>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "commands.hpp"
#include "hslr/errors.hpp"
#include "hslr/matrix_io.hpp"
#include "hslr/metrics.hpp"
#include "hslr/model.hpp"
#include "synth_gen.hpp"
#include "util.hpp"

namespace hslr::cli {

namespace {

struct SweepOpts {
  std::string input;
  std::string synth;
  std::vector<std::string> methods;
  std::vector<double> ps;
  std::vector<std::size_t> ranks;
  std::vector<std::size_t> depths;
  float eps = 1e-6f;
  std::uint64_t seed = 0;
  std::size_t oversample = 8;
  std::size_t power_iters = 2;
  std::string out_csv;
};

struct Cell {
  Method method;
  double p;
  std::size_t rank;
  std::size_t depth;
};

struct CellResult {
  bool ok = false;
  StorageReport storage;
  double frobenius_rel = 0.0;
  std::uint64_t wall_ms = 0;
  std::string error;
};

ModelParams cell_params(const Cell& cell, const SweepOpts& opts) {
  ModelParams params;
  params.p = cell.p;
  params.rank = cell.rank;
  params.depth = cell.depth;
  params.oversample = opts.oversample;
  params.power_iters = opts.power_iters;
  params.eps = opts.eps;
  params.seed = RngSeed{opts.seed};
  return params;
}

CellResult run_cell(const DenseMatrix& w, const Cell& cell,
                    const SweepOpts& opts) {
  CellResult result;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    const Model model = compress(w, cell.method, cell_params(cell, opts));
    result.storage = storage_count(model);
    result.frobenius_rel = error_report(w, densify(model)).frobenius_rel;
    result.ok = true;
  } catch (const std::exception& e) {
    result.error = e.what();
  }
  const auto t1 = std::chrono::steady_clock::now();
  result.wall_ms = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count());
  return result;
}

// HISLR_THREADS caps worker count; 0 or unset picks the hardware default.
std::size_t worker_count(std::size_t cells) {
  std::size_t cap = 0;
  if (const char* env = std::getenv("HISLR_THREADS")) {
    const std::string_view text(env);
    if (!text.empty()) {
      const auto [ptr, ec] =
          std::from_chars(text.data(), text.data() + text.size(), cap);
      if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw ParamError("HISLR_THREADS must be an unsigned integer");
      }
    }
  }
  if (cap == 0) {
    cap = std::thread::hardware_concurrency();
    if (cap == 0) cap = 1;
  }
  return cap < cells ? cap : cells;
}

// Quotes a CSV field only when it needs it, doubling embedded quotes.
std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string quoted = "\"";
  for (char c : field) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

void run_sweep(const SweepOpts& opts) {
  if (opts.input.empty() == opts.synth.empty()) {
    throw ParamError("exactly one of --input and --synth is required");
  }
  if (opts.methods.empty() || opts.ps.empty() || opts.ranks.empty() ||
      opts.depths.empty()) {
    throw ParamError("method and grid lists must be non-empty");
  }

  std::vector<Method> methods;
  for (const std::string& name : opts.methods) {
    const auto method = parse_method(name);
    if (!method) {
      throw ParamError("unknown method \"" + name + "\"");
    }
    methods.push_back(*method);
  }

  const DenseMatrix w = opts.input.empty()
                            ? generate(parse_synth_spec(opts.synth)).matrix
                            : load_matrix(opts.input);

  // Grid order is fixed: method outermost, then p, rank, depth.
  std::vector<Cell> cells;
  for (Method method : methods) {
    for (double p : opts.ps) {
      for (std::size_t rank : opts.ranks) {
        for (std::size_t depth : opts.depths) {
          cells.push_back(Cell{method, p, rank, depth});
        }
      }
    }
  }

  // Reject the whole grid before any cell runs.
  for (const Cell& cell : cells) {
    validate_compress_params(w.rows(), w.cols(), cell.method,
                             cell_params(cell, opts));
  }

  std::vector<CellResult> results(cells.size());
  const std::size_t workers = worker_count(cells.size());
  std::atomic<std::size_t> next{0};
  auto drain = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= cells.size()) break;
      results[i] = run_cell(w, cells[i], opts);
    }
  };
  if (workers <= 1) {
    drain();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(drain);
    for (std::thread& t : pool) t.join();
  }

  std::ofstream out(opts.out_csv, std::ios::trunc);
  if (!out) {
    throw IoError("cannot open " + opts.out_csv + " for writing");
  }
  out << "method,p,rank,depth,stored_values,index_overhead,compression_ratio,"
         "frobenius_rel,wall_ms,error\n";
  std::size_t succeeded = 0;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const Cell& cell = cells[i];
    const CellResult& r = results[i];
    out << method_name(cell.method) << "," << format_double(cell.p) << ","
        << cell.rank << "," << cell.depth << ",";
    if (r.ok) {
      ++succeeded;
      out << r.storage.stored_values << "," << r.storage.index_overhead << ","
          << format_double(r.storage.compression_ratio) << ","
          << format_double(r.frobenius_rel);
    } else {
      out << ",,,";
    }
    out << "," << r.wall_ms << "," << csv_escape(r.error) << "\n";
  }
  out.flush();
  if (!out) {
    throw IoError("write to " + opts.out_csv + " failed");
  }

  nlohmann::ordered_json summary;
  summary["cells"] = cells.size();
  summary["succeeded"] = succeeded;
  summary["failed"] = cells.size() - succeeded;
  summary["csv"] = opts.out_csv;
  std::cout << summary.dump() << "\n";

  if (succeeded == 0) {
    throw Error("all sweep cells failed; see the CSV error column");
  }
}

} // namespace

void register_sweep(CLI::App& app) {
  auto opts = std::make_shared<SweepOpts>();
  CLI::App* cmd = app.add_subcommand(
      "sweep", "Run a compression grid and write one CSV row per cell");
  cmd->add_option("--input", opts->input, "Input matrix path");
  cmd->add_option("--synth", opts->synth,
                  "Synthetic input spec, e.g. banded:n=256,band=3,seed=1");
  cmd->add_option("--methods", opts->methods,
                  "Comma-separated method list")
      ->required()
      ->delimiter(',');
  cmd->add_option("--p", opts->ps, "Comma-separated spike percentages")
      ->required()
      ->delimiter(',');
  cmd->add_option("--ranks", opts->ranks, "Comma-separated ranks")
      ->required()
      ->delimiter(',');
  cmd->add_option("--depths", opts->depths, "Comma-separated depths")
      ->required()
      ->delimiter(',');
  cmd->add_option("--eps", opts->eps, "Singular value drop tolerance")
      ->capture_default_str();
  cmd->add_option("--seed", opts->seed, "Random seed")->capture_default_str();
  cmd->add_option("--oversample", opts->oversample,
                  "Sketch oversampling (randomized methods)")
      ->capture_default_str();
  cmd->add_option("--power-iters", opts->power_iters,
                  "Power iterations (randomized methods)")
      ->capture_default_str();
  cmd->add_option("--out", opts->out_csv, "Output CSV path")->required();
  cmd->callback([opts] { run_sweep(*opts); });
}

} // namespace hslr::cli
