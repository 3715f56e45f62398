// Copyright 2026 the hslr authors
// SPDX-License-Identifier: Apache-2.0

#ifndef HSLR_TOOLS_SYNTH_GEN_HPP
#define HSLR_TOOLS_SYNTH_GEN_HPP

#include <cstddef>
#include <string>
#include <string_view>

#include <json.hpp>

#include "hslr/dense_matrix.hpp"
#include "hslr/rng.hpp"

namespace hslr::cli {

/// Parameters for the synthetic matrix generators. Each generator reads the
/// subset it needs; the rest are ignored.
struct SynthSpec {
  std::string generator; // banded | banded-scrambled | spiked-lowrank | gaussian
  std::size_t n = 256;
  std::size_t band = 3;     // banded, banded-scrambled
  std::size_t rank = 8;     // spiked-lowrank
  std::size_t spikes = 16;  // spiked-lowrank
  RngSeed seed;
};

struct SynthResult {
  DenseMatrix matrix;
  nlohmann::ordered_json sidecar; // reproducibility record for the output
};

/// Builds the requested matrix, deterministically for a given seed. Unknown
/// generator names or out-of-range sizes raise ParamError.
SynthResult generate(const SynthSpec& spec);

/// Parses a compact spec string "name:key=value,key=value" with integer keys
/// n, band, rank, spikes, seed ("gaussian:n=256,seed=1"). The bare name with
/// no colon selects the generator with default sizes.
SynthSpec parse_synth_spec(std::string_view text);

} // namespace hslr::cli

#endif // HSLR_TOOLS_SYNTH_GEN_HPP
