// SPDX-License-Identifier: Apache-2.0
//
// Scenario configuration and pipeline plumbing: presets, validation
// messages, JSON round-trips, and the manifest-rerun reproducibility
// contract (byte-identical CSV outputs).

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "uowc/pipeline.hpp"

using namespace uowc;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Small, fast scenario used for end-to-end plumbing tests.
ScenarioConfig tiny_config(const std::string& out_dir) {
  ScenarioConfig cfg;
  cfg.water_preset = "harbor1";
  cfg.water = water_preset("harbor1");
  cfg.directions = 8;
  cfg.lloyd.max_iterations = 120;
  cfg.grid.x_max = 0.5;
  cfg.grid.t_max = 5e-9;
  cfg.ti_sweeps = 120;
  cfg.start_distance = 0.1;
  cfg.mc_photons = 20000;
  cfg.mc_distances = {0.2, 0.4};
  cfg.out_dir = out_dir;
  return cfg;
}

}  // namespace

TEST_SUITE_BEGIN("scenario");

TEST_CASE("water presets and the unknown-preset message") {
  const auto h1 = water_preset("harbor1");
  CHECK(h1.scattering == doctest::Approx(0.91));
  CHECK(h1.attenuation == doctest::Approx(1.1));
  CHECK(h1.absorption == doctest::Approx(0.19));
  const auto h2 = water_preset("Harbor-II");
  CHECK(h2.scattering == doctest::Approx(1.8177));
  CHECK(h2.attenuation == doctest::Approx(2.2));

  try {
    water_preset("lake9");
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("harbor1") != std::string::npos);
    CHECK(msg.find("harbor2") != std::string::npos);
  }
}

TEST_CASE("validation collects field-level messages") {
  ScenarioConfig cfg;
  cfg.directions = 7;        // must be even
  cfg.aperture_diameter = 0.001;  // below one dy
  cfg.grid.dx = -1.0;        // invalid step
  try {
    cfg.validate();
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("angles: count") != std::string::npos);
    CHECK(msg.find("aperture") != std::string::npos);
    CHECK(msg.find("grid:") != std::string::npos);
  }
}

TEST_CASE("json round-trip preserves the configuration") {
  ScenarioConfig cfg = tiny_config("unused");
  cfg.psf = PhaseFunction::tthg(0.9832, 0.8838, -0.9835);
  cfg.scheme_points = 5;
  cfg.sub_points = 40;
  cfg.mode = RunMode::kCompare;
  cfg.seed = 987654321;
  const std::string text = config_to_json_text(cfg);
  const ScenarioConfig back = config_from_json_text(text);
  CHECK(config_to_json_text(back) == text);
  CHECK(back.water.scattering == cfg.water.scattering);
  CHECK(back.scheme_points == 5);
  CHECK(back.sub_points == 40);
  CHECK(back.mode == RunMode::kCompare);
  CHECK(back.seed == cfg.seed);
}

TEST_CASE("defaults parse from an empty object") {
  const ScenarioConfig cfg = config_from_json_text("{}");
  CHECK(cfg.directions == 22);
  CHECK(cfg.scheme_points == 7);
  CHECK(cfg.sub_points == 7);
  CHECK(cfg.grid.dx == doctest::Approx(0.05));
  CHECK(cfg.mode == RunMode::kTi);
  CHECK_NOTHROW(cfg.validate());
}

TEST_CASE("bad json and bad enum values raise config errors") {
  CHECK_THROWS_AS(config_from_json_text("{"), ConfigError);
  CHECK_THROWS_AS(config_from_json_text(R"({"solver":{"mode":"warp"}})"), ConfigError);
  CHECK_THROWS_AS(config_from_json_text(R"({"phase":{"type":"mie"}})"), ConfigError);
  CHECK_THROWS_AS(config_from_json_text(R"({"water":{"preset":"lake9"}})"), ConfigError);
  CHECK_THROWS_AS(config_from_json_text(R"({"water":{}})"), ConfigError);
}

TEST_CASE("stationary run writes csv and manifest; manifest rerun is byte-identical") {
  const fs::path base = fs::temp_directory_path() / "uowc_scenario_test";
  fs::remove_all(base);

  ScenarioConfig cfg = tiny_config((base / "run1").string());
  ScenarioRun run(cfg);
  const auto files = run.run_to_disk();
  CHECK(fs::exists(base / "run1" / "power_ti.csv"));
  CHECK(fs::exists(base / "run1" / "manifest.json"));

  // Rerun from the manifest into a second directory.
  ScenarioConfig again = load_config_file((base / "run1" / "manifest.json").string());
  again.out_dir = (base / "run2").string();
  ScenarioRun rerun(again);
  rerun.run_to_disk();

  CHECK(slurp(base / "run1" / "power_ti.csv") == slurp(base / "run2" / "power_ti.csv"));
  fs::remove_all(base);
}

TEST_CASE("compare mode emits the ratio column and is reproducible") {
  const fs::path base = fs::temp_directory_path() / "uowc_compare_test";
  fs::remove_all(base);

  ScenarioConfig cfg = tiny_config((base / "c1").string());
  cfg.mode = RunMode::kCompare;
  ScenarioRun run(cfg);
  run.run_to_disk();
  const std::string csv = slurp(base / "c1" / "compare.csv");
  CHECK(csv.rfind("distance_m,rte_power_norm,mc_captured_fraction,mc_stderr,rte_norm,mc_norm,"
                  "abs_log10_ratio\n",
                  0) == 0);

  ScenarioConfig again = load_config_file((base / "c1" / "manifest.json").string());
  again.out_dir = (base / "c2").string();
  ScenarioRun rerun(again);
  rerun.run_to_disk();
  CHECK(slurp(base / "c1" / "compare.csv") == slurp(base / "c2" / "compare.csv"));
  fs::remove_all(base);
}

TEST_CASE("td run writes the surface and the trailing average") {
  const fs::path base = fs::temp_directory_path() / "uowc_td_test";
  fs::remove_all(base);
  ScenarioConfig cfg = tiny_config((base / "td").string());
  cfg.mode = RunMode::kTd;
  cfg.grid.t_max = 4e-9;
  ScenarioRun run(cfg);
  run.run_to_disk();
  const std::string csv = slurp(base / "td" / "power_td.csv");
  CHECK(csv.rfind("distance_m,time_s,power_norm,ber\n", 0) == 0);
  CHECK(fs::exists(base / "td" / "power_td_avg.csv"));
  fs::remove_all(base);
}

TEST_CASE("plots are emitted on request") {
  const fs::path base = fs::temp_directory_path() / "uowc_plot_test";
  fs::remove_all(base);
  ScenarioConfig cfg = tiny_config((base / "p").string());
  cfg.emit_plots = true;
  cfg.dump_weights = true;
  ScenarioRun run(cfg);
  run.run_to_disk();
  CHECK(fs::exists(base / "p" / "power_vs_distance.svg"));
  CHECK(fs::exists(base / "p" / "ber_vs_distance.svg"));
  CHECK(fs::exists(base / "p" / "weights.csv"));
  const std::string svg = slurp(base / "p" / "power_vs_distance.svg");
  CHECK(svg.find("<svg") != std::string::npos);
  fs::remove_all(base);
}

TEST_SUITE_END();
