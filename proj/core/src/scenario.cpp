// SPDX-License-Identifier: Apache-2.0
//
// uowc-rte: a deterministic radiative-transfer channel solver for
// underwater optical wireless links.

#include "uowc/scenario.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace uowc {

using nlohmann::json;

std::string to_string(RunMode mode) {
  switch (mode) {
    case RunMode::kTd: return "td";
    case RunMode::kTi: return "ti";
    case RunMode::kMc: return "mc";
    case RunMode::kCompare: return "compare";
  }
  return "ti";
}

RunMode run_mode_from_string(const std::string& name) {
  if (name == "td") return RunMode::kTd;
  if (name == "ti") return RunMode::kTi;
  if (name == "mc") return RunMode::kMc;
  if (name == "compare") return RunMode::kCompare;
  throw ConfigError("mode must be one of td, ti, mc, compare; got '" + name + "'");
}

namespace {

std::string normalize_name(std::string s) {
  std::string out;
  for (char c : s) {
    if (std::isalnum(static_cast<unsigned char>(c))) {
      out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
  }
  return out;
}

std::string ring_model_name(RingModel m) {
  return m == RingModel::kAnnulus ? "annulus" : "recurrence";
}

RingModel ring_model_from_name(const std::string& name) {
  if (name == "annulus") return RingModel::kAnnulus;
  if (name == "recurrence") return RingModel::kRecurrence;
  throw ConfigError("receiver.ring_model must be 'annulus' or 'recurrence'; got '" + name + "'");
}

std::string source_scaling_name(SourceScaling s) {
  return s == SourceScaling::kNone ? "none" : "times_c";
}

SourceScaling source_scaling_from_name(const std::string& name) {
  if (name == "none") return SourceScaling::kNone;
  if (name == "times_c") return SourceScaling::kTimesC;
  throw ConfigError("solver.source_scaling must be 'none' or 'times_c'; got '" + name + "'");
}

}  // namespace

std::vector<std::string> water_preset_names() { return {"harbor1", "harbor2"}; }

WaterOpticalProperties water_preset(const std::string& name) {
  const std::string key = normalize_name(name);
  if (key == "harbor1" || key == "harbori") {
    return WaterOpticalProperties::from_scattering_attenuation(0.91, 1.1);
  }
  if (key == "harbor2" || key == "harborii") {
    return WaterOpticalProperties::from_scattering_attenuation(1.8177, 2.2);
  }
  std::ostringstream msg;
  msg << "unknown water preset '" << name << "'; valid presets:";
  for (const auto& p : water_preset_names()) msg << " " << p;
  throw ConfigError(msg.str());
}

std::vector<double> ScenarioConfig::compare_distances() const {
  if (!mc_distances.empty()) return mc_distances;
  std::vector<double> out;
  const double lo = start_distance + grid.dx;
  const double hi = grid.x_max;
  const int points = 6;
  for (int i = 0; i < points; ++i) {
    const double d = lo + (hi - lo) * i / (points - 1);
    // snap to a grid column
    const int col = static_cast<int>(std::lround(d / grid.dx));
    out.push_back(col * grid.dx);
  }
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void ScenarioConfig::validate() const {
  std::vector<std::string> errors;
  auto check = [&](bool ok, const std::string& msg) {
    if (!ok) errors.push_back(msg);
  };

  check(water.absorption >= 0.0 && water.scattering >= 0.0,
        "water: coefficients must be non-negative");
  check(std::abs(water.attenuation - (water.absorption + water.scattering)) <=
            1e-12 * std::max(1.0, water.attenuation),
        "water: attenuation must equal absorption + scattering");
  check(water.attenuation > 0.0, "water: attenuation must be positive");

  try {
    grid.validate();
  } catch (const ConfigError& e) {
    errors.emplace_back(e.what());
  }
  check(std::abs(grid.v - kSpeedOfLight / refractive_index) <= 1e-6 * grid.v,
        "grid: celerity must equal c0 / refractive_index");

  try {
    (void)source();
  } catch (const ConfigError& e) {
    errors.emplace_back(e.what());
  }
  try {
    electronics.validate();
  } catch (const ConfigError& e) {
    errors.emplace_back(e.what());
  }

  check(directions >= 4 && directions % 2 == 0, "angles: count must be even and at least 4");
  check(lloyd.epsilon > 0.0, "angles: epsilon must be positive");
  check(lloyd.max_iterations > 0, "angles: max_iterations must be positive");

  try {
    check(sub_points >= min_sub_points(scheme()),
          "quadrature: sub_points below the scheme minimum");
  } catch (const ConfigError& e) {
    errors.emplace_back(e.what());
  }

  check(aperture_diameter > 0.0, "receiver: aperture must be positive");
  check(0.5 * aperture_diameter >= grid.dy,
        "receiver: aperture radius must be at least one grid step dy");
  check(fov_half_angle > 0.0 && fov_half_angle <= kPi,
        "receiver: fov half-angle must lie in (0, pi]");
  if (errors.empty()) {
    const int rings = static_cast<int>(std::floor(0.5 * aperture_diameter / grid.dy));
    check(grid.center_row() + rings <= grid.rows(),
          "receiver: aperture exceeds the grid height above the beam axis");
  }

  check(ti_sweeps > 0, "solver: sweeps must be positive");
  check(ti_tolerance >= 0.0, "solver: tolerance must be >= 0");
  check(mc_photons >= 10000, "mc: photons must be at least 1e4");
  for (double d : mc_distances) {
    check(d > 0.0 && d <= grid.x_max + 1e-12, "mc: distances must lie in (0, x_max]");
  }
  check(start_distance >= 0.0 && start_distance < grid.x_max,
        "output: start_distance must lie in [0, x_max)");
  check(!out_dir.empty(), "output: directory must not be empty");

  if (!errors.empty()) {
    std::ostringstream msg;
    msg << "invalid scenario configuration:";
    for (const auto& e : errors) msg << "\n  - " << e;
    throw ConfigError(msg.str());
  }
}

namespace {

json phase_to_json(const PhaseFunction& pf) {
  json j;
  if (const auto* p = std::get_if<Sthg>(&pf.params())) {
    j["type"] = "sthg";
    j["g"] = p->g;
  } else if (const auto* p = std::get_if<Tthg>(&pf.params())) {
    j["type"] = "tthg";
    j["alpha"] = p->alpha;
    j["g1"] = p->g1;
    j["g2"] = p->g2;
  } else {
    const auto& ff = std::get<FournierForand>(pf.params());
    j["type"] = "ff";
    j["mu"] = ff.mu;
    j["n_p"] = ff.n_p;
  }
  return j;
}

PhaseFunction phase_from_json(const json& j) {
  const std::string type = j.value("type", "sthg");
  if (type == "sthg") return PhaseFunction::sthg(j.value("g", 0.93));
  if (type == "tthg") {
    return PhaseFunction::tthg(j.value("alpha", 0.9832), j.value("g1", 0.8838),
                               j.value("g2", -0.9835));
  }
  if (type == "ff") return PhaseFunction::fournier_forand(j.value("mu", 3.483), j.value("n_p", 1.33));
  throw ConfigError("phase.type must be one of sthg, tthg, ff; got '" + type + "'");
}

}  // namespace

ScenarioConfig config_from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (j.contains("config")) j = j["config"];  // accept a run manifest

  ScenarioConfig cfg;
  try {
    if (j.contains("water")) {
      const json& w = j["water"];
      const double wl = w.value("wavelength_nm", 532.0);
      if (w.contains("preset")) {
        cfg.water_preset = w["preset"].get<std::string>();
        cfg.water = water_preset(cfg.water_preset);
        cfg.water.wavelength_nm = wl;
      } else if (w.contains("a")) {
        cfg.water = WaterOpticalProperties::from_absorption_scattering(
            w["a"].get<double>(), w.value("b", 0.0), wl);
      } else if (w.contains("b") && w.contains("c")) {
        cfg.water = WaterOpticalProperties::from_scattering_attenuation(
            w["b"].get<double>(), w["c"].get<double>(), wl);
      } else {
        throw ConfigError("water: give a preset, (a, b), or (b, c)");
      }
    }
    if (j.contains("phase")) cfg.psf = phase_from_json(j["phase"]);
    if (j.contains("grid")) {
      const json& g = j["grid"];
      cfg.grid.dx = g.value("dx", cfg.grid.dx);
      cfg.grid.dy = g.value("dy", cfg.grid.dy);
      cfg.grid.dt = g.value("dt", cfg.grid.dt);
      cfg.grid.x_max = g.value("x_max", cfg.grid.x_max);
      cfg.grid.y_max = g.value("y_max", cfg.grid.y_max);
      cfg.grid.t_max = g.value("t_max", cfg.grid.t_max);
      cfg.refractive_index = g.value("refractive_index", cfg.refractive_index);
    }
    cfg.grid.v = kSpeedOfLight / cfg.refractive_index;
    if (j.contains("source")) {
      const json& s = j["source"];
      cfg.source_power = s.value("power_w", cfg.source_power);
      cfg.beam_waist = s.value("beam_waist_m", cfg.beam_waist);
      cfg.divergence = s.value("divergence_rad", cfg.divergence);
    }
    if (j.contains("receiver")) {
      const json& r = j["receiver"];
      cfg.aperture_diameter = r.value("aperture_m", cfg.aperture_diameter);
      cfg.fov_half_angle = r.value("fov_half_angle_rad", cfg.fov_half_angle);
      if (r.contains("ring_model")) {
        cfg.ring_model = ring_model_from_name(r["ring_model"].get<std::string>());
      }
    }
    if (j.contains("electronics")) {
      const json& e = j["electronics"];
      cfg.electronics.responsivity = e.value("responsivity_a_per_w", cfg.electronics.responsivity);
      cfg.electronics.gain = e.value("gain", cfg.electronics.gain);
      cfg.electronics.dark_current = e.value("dark_current_a", cfg.electronics.dark_current);
      cfg.electronics.bandwidth = e.value("bandwidth_hz", cfg.electronics.bandwidth);
      cfg.electronics.temperature = e.value("temperature_k", cfg.electronics.temperature);
      cfg.electronics.load_resistance =
          e.value("load_resistance_ohm", cfg.electronics.load_resistance);
    }
    if (j.contains("angles")) {
      const json& a = j["angles"];
      cfg.directions = a.value("count", cfg.directions);
      cfg.lloyd.epsilon = a.value("epsilon", cfg.lloyd.epsilon);
      cfg.lloyd.max_iterations = a.value("max_iterations", cfg.lloyd.max_iterations);
    }
    if (j.contains("quadrature")) {
      const json& q = j["quadrature"];
      cfg.scheme_points = q.value("scheme", cfg.scheme_points);
      cfg.sub_points = q.value("sub_points", cfg.sub_points);
    }
    if (j.contains("solver")) {
      const json& s = j["solver"];
      if (s.contains("mode")) cfg.mode = run_mode_from_string(s["mode"].get<std::string>());
      cfg.ti_sweeps = s.value("sweeps", cfg.ti_sweeps);
      cfg.ti_tolerance = s.value("tolerance", cfg.ti_tolerance);
      cfg.gauss_seidel = s.value("gauss_seidel", cfg.gauss_seidel);
      if (s.contains("source_scaling")) {
        cfg.source_scaling = source_scaling_from_name(s["source_scaling"].get<std::string>());
      }
      cfg.allow_unstable = s.value("allow_unstable", cfg.allow_unstable);
    }
    if (j.contains("mc")) {
      const json& m = j["mc"];
      cfg.mc_photons = m.value("photons", cfg.mc_photons);
      cfg.seed = m.value("seed", cfg.seed);
      cfg.threads = m.value("threads", cfg.threads);
      if (m.contains("distances")) cfg.mc_distances = m["distances"].get<std::vector<double>>();
    }
    if (j.contains("output")) {
      const json& o = j["output"];
      cfg.out_dir = o.value("directory", cfg.out_dir);
      cfg.start_distance = o.value("start_distance_m", cfg.start_distance);
      cfg.emit_plots = o.value("plots", cfg.emit_plots);
      cfg.dump_weights = o.value("dump_weights", cfg.dump_weights);
      cfg.dump_field = o.value("dump_field", cfg.dump_field);
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config field has the wrong type: ") + e.what());
  }
  return cfg;
}

std::string config_to_json_text(const ScenarioConfig& cfg) {
  json j;
  json w;
  if (!cfg.water_preset.empty()) w["preset"] = cfg.water_preset;
  w["a"] = cfg.water.absorption;
  w["b"] = cfg.water.scattering;
  w["c"] = cfg.water.attenuation;
  w["wavelength_nm"] = cfg.water.wavelength_nm;
  j["water"] = w;
  j["phase"] = phase_to_json(cfg.psf);
  j["grid"] = {{"dx", cfg.grid.dx},       {"dy", cfg.grid.dy},
               {"dt", cfg.grid.dt},       {"x_max", cfg.grid.x_max},
               {"y_max", cfg.grid.y_max}, {"t_max", cfg.grid.t_max},
               {"refractive_index", cfg.refractive_index}};
  j["source"] = {{"power_w", cfg.source_power},
                 {"beam_waist_m", cfg.beam_waist},
                 {"divergence_rad", cfg.divergence}};
  j["receiver"] = {{"aperture_m", cfg.aperture_diameter},
                   {"fov_half_angle_rad", cfg.fov_half_angle},
                   {"ring_model", ring_model_name(cfg.ring_model)}};
  j["electronics"] = {{"responsivity_a_per_w", cfg.electronics.responsivity},
                      {"gain", cfg.electronics.gain},
                      {"dark_current_a", cfg.electronics.dark_current},
                      {"bandwidth_hz", cfg.electronics.bandwidth},
                      {"temperature_k", cfg.electronics.temperature},
                      {"load_resistance_ohm", cfg.electronics.load_resistance}};
  j["angles"] = {{"count", cfg.directions},
                 {"epsilon", cfg.lloyd.epsilon},
                 {"max_iterations", cfg.lloyd.max_iterations}};
  j["quadrature"] = {{"scheme", cfg.scheme_points}, {"sub_points", cfg.sub_points}};
  j["solver"] = {{"mode", to_string(cfg.mode)},
                 {"sweeps", cfg.ti_sweeps},
                 {"tolerance", cfg.ti_tolerance},
                 {"gauss_seidel", cfg.gauss_seidel},
                 {"source_scaling", source_scaling_name(cfg.source_scaling)},
                 {"allow_unstable", cfg.allow_unstable}};
  j["mc"] = {{"photons", cfg.mc_photons},
             {"seed", cfg.seed},
             {"threads", cfg.threads},
             {"distances", cfg.mc_distances}};
  j["output"] = {{"directory", cfg.out_dir},
                 {"start_distance_m", cfg.start_distance},
                 {"plots", cfg.emit_plots},
                 {"dump_weights", cfg.dump_weights},
                 {"dump_field", cfg.dump_field}};
  return j.dump(2);
}

ScenarioConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return config_from_json_text(buf.str());
}

}  // namespace uowc
