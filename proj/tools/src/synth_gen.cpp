// Copyright 2026 the hslr authors
// SPDX-License-Identifier: Apache-2.0

#include "synth_gen.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "hslr/errors.hpp"
#include "hslr/permutation.hpp"
#include "hslr/rcm.hpp"

namespace hslr::cli {

namespace {

// In-band values are a Gaussian shifted half a unit away from zero, so the
// band is fully populated and the bandwidth is exact by construction.
DenseMatrix make_banded(std::size_t n, std::size_t band, RngSeed seed) {
  GaussianSampler sampler(seed);
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t dist = i > j ? i - j : j - i;
      if (dist > band) continue;
      const float g = sampler.next();
      m(i, j) = g + (g >= 0.0f ? 0.5f : -0.5f);
    }
  }
  return m;
}

std::vector<std::uint32_t> random_permutation(std::size_t n, RngSeed seed) {
  std::vector<std::uint32_t> forward(n);
  std::iota(forward.begin(), forward.end(), 0u);
  RandomBits bits(seed);
  for (std::size_t i = n; i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(bits.next_below(i));
    std::swap(forward[i - 1], forward[j]);
  }
  return forward;
}

SynthResult gen_banded(const SynthSpec& spec, bool scrambled) {
  if (spec.band >= spec.n) {
    throw ParamError("band must be smaller than n");
  }
  SynthResult result{make_banded(spec.n, spec.band, spec.seed), {}};
  result.sidecar["generator"] = scrambled ? "banded-scrambled" : "banded";
  result.sidecar["n"] = spec.n;
  result.sidecar["band"] = spec.band;
  result.sidecar["seed"] = spec.seed.value;
  if (scrambled) {
    auto forward = random_permutation(spec.n, derive_seed(spec.seed, 1));
    result.sidecar["permutation"] = forward;
    result.matrix = apply_sym_perm(
        result.matrix, Permutation::from_forward(std::move(forward)));
  }
  return result;
}

SynthResult gen_spiked_lowrank(const SynthSpec& spec) {
  const std::size_t n = spec.n;
  if (spec.rank < 1 || spec.rank > n) {
    throw ParamError("rank must lie in [1, n]");
  }
  if (spec.spikes > n * n / 2) {
    throw ParamError("too many spikes for the matrix size");
  }
  const DenseMatrix u = gaussian_matrix(n, spec.rank, derive_seed(spec.seed, 0));
  const DenseMatrix v = gaussian_matrix(n, spec.rank, derive_seed(spec.seed, 1));
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double acc = 0.0;
      for (std::size_t r = 0; r < spec.rank; ++r) {
        acc += static_cast<double>(u(i, r)) * static_cast<double>(v(j, r));
      }
      m(i, j) = static_cast<float>(acc * scale);
    }
  }

  RandomBits bits(derive_seed(spec.seed, 2));
  GaussianSampler sampler(derive_seed(spec.seed, 3));
  std::set<std::pair<std::size_t, std::size_t>> taken;
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  while (taken.size() < spec.spikes) {
    const auto row = static_cast<std::size_t>(bits.next_below(n));
    const auto col = static_cast<std::size_t>(bits.next_below(n));
    if (!taken.emplace(row, col).second) continue;
    const float g = sampler.next();
    const float value = g + (g >= 0.0f ? 10.0f : -10.0f);
    m(row, col) += value;
    entries.push_back({{"row", row}, {"col", col}, {"value", value}});
  }

  SynthResult result{std::move(m), {}};
  result.sidecar["generator"] = "spiked-lowrank";
  result.sidecar["n"] = n;
  result.sidecar["rank"] = spec.rank;
  result.sidecar["spikes"] = spec.spikes;
  result.sidecar["seed"] = spec.seed.value;
  result.sidecar["spike_entries"] = std::move(entries);
  return result;
}

SynthResult gen_gaussian(const SynthSpec& spec) {
  SynthResult result{gaussian_matrix(spec.n, spec.n, spec.seed), {}};
  result.sidecar["generator"] = "gaussian";
  result.sidecar["n"] = spec.n;
  result.sidecar["seed"] = spec.seed.value;
  return result;
}

} // namespace

SynthResult generate(const SynthSpec& spec) {
  if (spec.n < 1) {
    throw ParamError("n must be at least 1");
  }
  if (spec.generator == "banded") return gen_banded(spec, false);
  if (spec.generator == "banded-scrambled") return gen_banded(spec, true);
  if (spec.generator == "spiked-lowrank") return gen_spiked_lowrank(spec);
  if (spec.generator == "gaussian") return gen_gaussian(spec);
  throw ParamError("unknown generator \"" + spec.generator +
                   "\"; expected banded, banded-scrambled, spiked-lowrank, or "
                   "gaussian");
}

SynthSpec parse_synth_spec(std::string_view text) {
  SynthSpec spec;
  const std::size_t colon = text.find(':');
  spec.generator = std::string(text.substr(0, colon));
  if (spec.generator.empty()) {
    throw ParamError("synthetic spec needs a generator name");
  }
  if (colon == std::string_view::npos) return spec;

  std::string_view rest = text.substr(colon + 1);
  while (!rest.empty()) {
    const std::size_t comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{}
                                           : rest.substr(comma + 1);
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0 || eq + 1 == item.size()) {
      throw ParamError("bad synthetic spec item \"" + std::string(item) +
                       "\"; expected key=value");
    }
    const std::string_view key = item.substr(0, eq);
    const std::string_view value = item.substr(eq + 1);
    std::uint64_t parsed = 0;
    const auto [ptr, ec] =
        std::from_chars(value.data(), value.data() + value.size(), parsed);
    if (ec != std::errc{} || ptr != value.data() + value.size()) {
      throw ParamError("bad integer \"" + std::string(value) +
                       "\" in synthetic spec");
    }
    if (key == "n") {
      spec.n = static_cast<std::size_t>(parsed);
    } else if (key == "band") {
      spec.band = static_cast<std::size_t>(parsed);
    } else if (key == "rank") {
      spec.rank = static_cast<std::size_t>(parsed);
    } else if (key == "spikes") {
      spec.spikes = static_cast<std::size_t>(parsed);
    } else if (key == "seed") {
      spec.seed = RngSeed{parsed};
    } else {
      throw ParamError("unknown synthetic spec key \"" + std::string(key) +
                       "\"");
    }
  }
  return spec;
}

} // namespace hslr::cli
