// Copyright 2026 the hslr authors
// SPDX-License-Identifier: Apache-2.0

#include <cstdint>
#include <fstream>
#include <memory>
#include <string>

#include "commands.hpp"
#include "hslr/errors.hpp"
#include "hslr/matrix_io.hpp"
#include "synth_gen.hpp"
#include "util.hpp"

namespace hslr::cli {

namespace {

struct SynthOpts {
  std::string generator;
  std::string output;
  std::size_t n = 256;
  std::size_t band = 3;
  std::size_t rank = 8;
  std::size_t spikes = 16;
  std::uint64_t seed = 0;
  std::string dtype = "f32";
};

void run_synth(const SynthOpts& opts) {
  SynthSpec spec;
  spec.generator = opts.generator;
  spec.n = opts.n;
  spec.band = opts.band;
  spec.rank = opts.rank;
  spec.spikes = opts.spikes;
  spec.seed = RngSeed{opts.seed};

  SynthResult result = generate(spec);
  save_matrix(result.matrix, opts.output, parse_dtype(opts.dtype));

  const std::string sidecar_path = opts.output + ".json";
  std::ofstream out(sidecar_path, std::ios::trunc);
  if (!out) {
    throw IoError("cannot open " + sidecar_path + " for writing");
  }
  out << result.sidecar.dump(2) << "\n";
  out.flush();
  if (!out) {
    throw IoError("write to " + sidecar_path + " failed");
  }
}

} // namespace

void register_synth(CLI::App& app) {
  auto opts = std::make_shared<SynthOpts>();
  CLI::App* cmd = app.add_subcommand(
      "synth", "Generate a synthetic test matrix plus a sidecar JSON");
  cmd->add_option("generator", opts->generator,
                  "banded | banded-scrambled | spiked-lowrank | gaussian")
      ->required();
  cmd->add_option("output", opts->output, "Output matrix path")->required();
  cmd->add_option("--n", opts->n, "Matrix dimension")->capture_default_str();
  cmd->add_option("--band", opts->band, "Half bandwidth (banded generators)")
      ->capture_default_str();
  cmd->add_option("--rank", opts->rank, "Base rank (spiked-lowrank)")
      ->capture_default_str();
  cmd->add_option("--spikes", opts->spikes, "Spike count (spiked-lowrank)")
      ->capture_default_str();
  cmd->add_option("--seed", opts->seed, "Random seed")->capture_default_str();
  cmd->add_option("--dtype", opts->dtype, "Stored value type: f32 | f16")
      ->capture_default_str();
  cmd->callback([opts] { run_synth(*opts); });
}

} // namespace hslr::cli
