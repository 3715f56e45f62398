// Copyright 2026 the hslr authors
// SPDX-License-Identifier: Apache-2.0

#include <exception>

#include <CLI11.hpp>

#include "commands.hpp"
#include "util.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Sparse plus hierarchical low-rank matrix compression"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "hslr 0.1.0");

  hslr::cli::register_compress(app);
  hslr::cli::register_matvec(app);
  hslr::cli::register_sweep(app);
  hslr::cli::register_synth(app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    hslr::cli::emit_error("usage", e.what());
    return 1;
  } catch (const std::exception& e) {
    return hslr::cli::report_exception(e);
  }
  return 0;
}
