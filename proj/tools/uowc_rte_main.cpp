// SPDX-License-Identifier: Apache-2.0
//
// uowc-rte: a deterministic radiative-transfer channel solver for
// underwater optical wireless links.
//
// Scenario-driven command line front end. Exit codes: 0 success, 2 bad
// configuration, 3 numerical failure, 4 Monte Carlo statistical failure.

#include <cstdio>
#include <exception>
#include <string>

#include <CLI11.hpp>

#include "uowc/pipeline.hpp"

int main(int argc, char** argv) {
  CLI::App app{"uowc-rte: radiative-transfer path-loss solver for underwater optical links"};

  std::string config_path, preset, psf, out_dir, mode;
  int scheme = 0, sub_points = 0, directions = 0;
  long long seed = -1;
  bool plot = false, allow_unstable = false, verbose = false;

  app.add_option("--config", config_path, "JSON scenario file (a run manifest also works)");
  app.add_option("--mode", mode, "td, ti, mc, or compare")
      ->check(CLI::IsMember({"td", "ti", "mc", "compare"}));
  app.add_option("--preset", preset, "water preset (harbor1, harbor2)");
  app.add_option("--psf", psf, "phase function: sthg, tthg, or ff")
      ->check(CLI::IsMember({"sthg", "tthg", "ff"}));
  app.add_option("--scheme", scheme, "quadrature scheme points: 3, 5, or 7")
      ->check(CLI::IsMember({3, 5, 7}));
  app.add_option("--M", sub_points, "sub-points per inter-angle interval");
  app.add_option("--K", directions, "number of discrete directions");
  app.add_option("--seed", seed, "photon tracking seed");
  app.add_option("--out", out_dir, "output directory");
  app.add_flag("--plot", plot, "emit SVG plots");
  app.add_flag("--allow-unstable", allow_unstable, "run explicit marching past the CFL guard");
  app.add_flag("-v,--verbose", verbose, "progress reporting");

  CLI11_PARSE(app, argc, argv);

  try {
    uowc::ScenarioConfig cfg;
    if (!config_path.empty()) cfg = uowc::load_config_file(config_path);
    if (!preset.empty()) {
      cfg.water_preset = preset;
      cfg.water = uowc::water_preset(preset);
    }
    if (!psf.empty()) {
      if (psf == "sthg") cfg.psf = uowc::PhaseFunction::sthg(0.93);
      if (psf == "tthg") cfg.psf = uowc::PhaseFunction::tthg(0.9832, 0.8838, -0.9835);
      if (psf == "ff") cfg.psf = uowc::PhaseFunction::fournier_forand(3.483, 1.33);
    }
    if (!mode.empty()) cfg.mode = uowc::run_mode_from_string(mode);
    if (scheme > 0) cfg.scheme_points = scheme;
    if (sub_points > 0) cfg.sub_points = sub_points;
    if (directions > 0) cfg.directions = directions;
    if (seed >= 0) cfg.seed = static_cast<std::uint64_t>(seed);
    if (!out_dir.empty()) cfg.out_dir = out_dir;
    if (plot) cfg.emit_plots = true;
    if (allow_unstable) cfg.allow_unstable = true;

    uowc::ScenarioRun run(std::move(cfg));
    run.run_to_disk(verbose);
  } catch (const uowc::ConfigError& e) {
    std::fprintf(stderr, "configuration error: %s\n", e.what());
    return 2;
  } catch (const uowc::McError& e) {
    std::fprintf(stderr, "photon tracking failure: %s\n", e.what());
    return 4;
  } catch (const uowc::NumericError& e) {
    std::fprintf(stderr, "numerical failure: %s\n", e.what());
    return 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
