// Copyright 2026 the hslr authors
// SPDX-License-Identifier: Apache-2.0

#ifndef HSLR_TOOLS_COMMANDS_HPP
#define HSLR_TOOLS_COMMANDS_HPP

#include <CLI11.hpp>

namespace hslr::cli {

// Each registration adds one subcommand whose callback performs the work and
// throws hslr errors on failure; main maps those to exit codes.
void register_compress(CLI::App& app);
void register_matvec(CLI::App& app);
void register_sweep(CLI::App& app);
void register_synth(CLI::App& app);

} // namespace hslr::cli

#endif // HSLR_TOOLS_COMMANDS_HPP
