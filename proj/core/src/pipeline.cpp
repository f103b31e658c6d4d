// SPDX-License-Identifier: Apache-2.0
//
// uowc-rte: a deterministic radiative-transfer channel solver for
// underwater optical wireless links.

#include "uowc/pipeline.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "uowc/svgplot.hpp"

namespace uowc {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void append_row(std::string& out, std::initializer_list<double> values) {
  char buf[48];
  bool first = true;
  for (double v : values) {
    if (!first) out.push_back(',');
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out += buf;
    first = false;
  }
  out.push_back('\n');
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write output file '" + path + "'");
  out << text;
}

}  // namespace

ScenarioRun::ScenarioRun(ScenarioConfig cfg) : cfg_(std::move(cfg)) {
  cfg_.validate();

  auto t0 = Clock::now();
  angles_ = optimal_scattering_angles(cfg_.psf, cfg_.directions, cfg_.lloyd);
  timings_.lloyd_s = seconds_since(t0);

  t0 = Clock::now();
  weights_ = weight_matrix(cfg_.psf, angles_, cfg_.sub_points, cfg_.scheme());
  timings_.weights_s = seconds_since(t0);

  fov_ = discretize_fov(angles_, cfg_.fov_half_angle);
  areas_ = ring_areas(cfg_.grid.dy, 0.5 * cfg_.aperture_diameter, cfg_.ring_model);
  source_ = cfg_.source();
  norm_denom_ = cfg_.power_norm_denominator();
}

int ScenarioRun::column_for_distance(double r) const {
  const int col = static_cast<int>(std::lround(r / cfg_.grid.dx));
  if (col < 0 || col >= cfg_.grid.cols()) {
    std::ostringstream msg;
    msg << "distance " << r << " m falls outside the grid";
    throw ConfigError(msg.str());
  }
  return col;
}

std::vector<int> ScenarioRun::output_columns() const {
  std::vector<int> cols;
  const int first = static_cast<int>(std::lround(cfg_.start_distance / cfg_.grid.dx));
  for (int j = std::max(first, 0); j < cfg_.grid.cols(); ++j) cols.push_back(j);
  return cols;
}

RteCurve ScenarioRun::curve_from_field(const RadianceField& field) const {
  RteCurve curve;
  for (int j : output_columns()) {
    const double p = received_power_at_column(field, j, cfg_.grid, areas_, fov_);
    curve.distance.push_back(j * cfg_.grid.dx);
    curve.power_w.push_back(p);
    curve.power_norm.push_back(p / norm_denom_);
    curve.ber.push_back(ber_ook(snr(p, cfg_.electronics)));
  }
  return curve;
}

RteCurve ScenarioRun::ti_curve() {
  TiOptions opts;
  opts.max_sweeps = cfg_.ti_sweeps;
  if (cfg_.ti_tolerance > 0.0) opts.tolerance = cfg_.ti_tolerance;
  opts.gauss_seidel = cfg_.gauss_seidel;
  opts.source_scaling = cfg_.source_scaling;

  const auto t0 = Clock::now();
  const RadianceField field =
      ti_solve(cfg_.grid, angles_, weights_, cfg_.water, source_, opts);
  timings_.rte_s += seconds_since(t0);
  return curve_from_field(field);
}

std::pair<TdSurface, RteCurve> ScenarioRun::td_run(double average_window,
                                                   const std::function<void(int, int)>& progress) {
  TdOptions opts;
  opts.source_scaling = cfg_.source_scaling;
  opts.allow_unstable = cfg_.allow_unstable;

  const std::vector<int> cols = output_columns();
  const int steps = cfg_.grid.time_steps();
  const int avg_from = static_cast<int>(std::ceil((1.0 - average_window) * (steps - 1)));

  TdSurface surface;
  for (int j : cols) surface.distance.push_back(j * cfg_.grid.dx);
  surface.time.reserve(steps);
  surface.power_norm.reserve(static_cast<std::size_t>(steps) * cols.size());
  surface.ber.reserve(static_cast<std::size_t>(steps) * cols.size());

  std::vector<double> avg(cols.size(), 0.0);
  int avg_count = 0;

  const auto t0 = Clock::now();
  auto observer = [&](int n, const RadianceField& field) {
    surface.time.push_back(n * cfg_.grid.dt);
    for (std::size_t ci = 0; ci < cols.size(); ++ci) {
      const double p = received_power_at_column(field, cols[ci], cfg_.grid, areas_, fov_);
      surface.power_norm.push_back(p / norm_denom_);
      surface.ber.push_back(ber_ook(snr(p, cfg_.electronics)));
      if (n >= avg_from) avg[ci] += p;
    }
    if (n >= avg_from) ++avg_count;
    if (progress) progress(n, steps - 1);
  };
  td_solve(cfg_.grid, angles_, weights_, cfg_.water, source_, opts, observer);
  timings_.rte_s += seconds_since(t0);

  RteCurve avg_curve;
  for (std::size_t ci = 0; ci < cols.size(); ++ci) {
    const double p = avg[ci] / std::max(avg_count, 1);
    avg_curve.distance.push_back(cols[ci] * cfg_.grid.dx);
    avg_curve.power_w.push_back(p);
    avg_curve.power_norm.push_back(p / norm_denom_);
    avg_curve.ber.push_back(ber_ook(snr(p, cfg_.electronics)));
  }
  return {std::move(surface), std::move(avg_curve)};
}

std::vector<McPoint> ScenarioRun::mc_points(const std::vector<double>& distances) {
  const ScatterSampler sampler(cfg_.psf, 1 << 16);
  const ReceiverGeometry rx = cfg_.receiver();
  std::vector<McPoint> points;
  for (double r : distances) {
    const auto t0 = Clock::now();
    const McResult res = trace_photons(cfg_.mc_photons, cfg_.water, sampler, source_, rx, r,
                                       cfg_.seed, cfg_.threads);
    McPoint p;
    p.distance = r;
    p.captured_fraction = res.captured_fraction;
    p.std_error = res.std_error;
    p.n_photons = res.n_photons;
    p.seed = res.seed;
    p.wall_s = seconds_since(t0);
    timings_.mc_s += p.wall_s;
    points.push_back(p);
  }
  return points;
}

std::vector<double> normalize_to_first(const std::vector<double>& values) {
  if (values.empty() || !(values.front() > 0.0)) {
    throw NumericError("cannot normalize a series whose first entry is not positive");
  }
  std::vector<double> out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) out[i] = values[i] / values.front();
  return out;
}

void write_ti_csv(const std::string& path, const RteCurve& curve) {
  std::string text = "distance_m,power_norm,ber\n";
  for (std::size_t i = 0; i < curve.distance.size(); ++i) {
    append_row(text, {curve.distance[i], curve.power_norm[i], curve.ber[i]});
  }
  write_text(path, text);
}

void write_td_csv(const std::string& path, const TdSurface& surface) {
  std::string text = "distance_m,time_s,power_norm,ber\n";
  const std::size_t nd = surface.distance.size();
  for (std::size_t t = 0; t < surface.time.size(); ++t) {
    for (std::size_t d = 0; d < nd; ++d) {
      append_row(text, {surface.distance[d], surface.time[t], surface.power_norm[t * nd + d],
                        surface.ber[t * nd + d]});
    }
  }
  write_text(path, text);
}

void write_mc_csv(const std::string& path, const std::vector<McPoint>& points) {
  std::string text = "distance_m,captured_fraction,stderr,n_photons,seed\n";
  char buf[128];
  for (const auto& p : points) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%ld,%llu\n", p.distance,
                  p.captured_fraction, p.std_error, p.n_photons,
                  static_cast<unsigned long long>(p.seed));
    text += buf;
  }
  write_text(path, text);
}

void write_compare_csv(const std::string& path, const RteCurve& rte,
                       const std::vector<McPoint>& mc) {
  if (rte.distance.size() != mc.size()) {
    throw NumericError("compare: RTE and MC series have different lengths");
  }
  std::vector<double> mc_values;
  for (const auto& p : mc) mc_values.push_back(p.captured_fraction);
  const std::vector<double> rte_norm = normalize_to_first(rte.power_norm);
  const std::vector<double> mc_norm = normalize_to_first(mc_values);

  std::string text =
      "distance_m,rte_power_norm,mc_captured_fraction,mc_stderr,rte_norm,mc_norm,abs_log10_ratio\n";
  for (std::size_t i = 0; i < mc.size(); ++i) {
    const double ratio = std::abs(std::log10(rte_norm[i] / mc_norm[i]));
    append_row(text, {rte.distance[i], rte.power_norm[i], mc[i].captured_fraction,
                      mc[i].std_error, rte_norm[i], mc_norm[i], ratio});
  }
  write_text(path, text);
}

std::vector<std::string> ScenarioRun::run_to_disk(bool verbose) {
  namespace fs = std::filesystem;
  fs::create_directories(cfg_.out_dir);
  const auto file = [&](const std::string& name) {
    return (fs::path(cfg_.out_dir) / name).string();
  };
  std::vector<std::string> written;
  nlohmann::json derived;

  auto progress = [&](int n, int total) {
    if (verbose && (n % std::max(1, total / 20) == 0 || n == total)) {
      std::fprintf(stderr, "td step %d/%d\n", n, total);
    }
  };

  switch (cfg_.mode) {
    case RunMode::kTi: {
      const RteCurve curve = ti_curve();
      write_ti_csv(file("power_ti.csv"), curve);
      written.push_back("power_ti.csv");
      if (cfg_.emit_plots) {
        write_line_plot(file("power_vs_distance.svg"), "Normalized received power (stationary)",
                        "distance, m", "normalized power", true,
                        {{"power", curve.distance, curve.power_norm}});
        write_line_plot(file("ber_vs_distance.svg"), "OOK error probability",
                        "distance, m", "BER", true, {{"ber", curve.distance, curve.ber}});
        written.push_back("power_vs_distance.svg");
        written.push_back("ber_vs_distance.svg");
      }
      break;
    }
    case RunMode::kTd: {
      auto [surface, avg_curve] = td_run(0.25, progress);
      write_td_csv(file("power_td.csv"), surface);
      write_ti_csv(file("power_td_avg.csv"), avg_curve);
      written.push_back("power_td.csv");
      written.push_back("power_td_avg.csv");
      if (cfg_.emit_plots) {
        write_heatmap(file("power_td_surface.svg"), "Normalized received power over time",
                      "distance, m", "time, s", surface.distance, surface.time,
                      surface.power_norm, true);
        write_line_plot(file("power_vs_distance.svg"),
                        "Normalized received power (trailing-window average)", "distance, m",
                        "normalized power", true,
                        {{"power", avg_curve.distance, avg_curve.power_norm}});
        written.push_back("power_td_surface.svg");
        written.push_back("power_vs_distance.svg");
      }
      break;
    }
    case RunMode::kMc: {
      const std::vector<McPoint> points = mc_points(cfg_.compare_distances());
      for (const auto& p : points) {
        if (!(p.captured_fraction > 0.0)) {
          std::ostringstream msg;
          msg << "no captured photons at distance " << p.distance << " m with " << p.n_photons
              << " photons";
          throw McError(msg.str());
        }
      }
      write_mc_csv(file("power_mc.csv"), points);
      written.push_back("power_mc.csv");
      if (cfg_.emit_plots) {
        std::vector<double> xs, ys;
        for (const auto& p : points) {
          xs.push_back(p.distance);
          ys.push_back(p.captured_fraction);
        }
        write_line_plot(file("power_vs_distance.svg"), "Captured fraction (photon tracking)",
                        "distance, m", "captured fraction", true, {{"mc", xs, ys}});
        written.push_back("power_vs_distance.svg");
      }
      break;
    }
    case RunMode::kCompare: {
      const std::vector<double> distances = cfg_.compare_distances();
      RteCurve full = ti_curve();
      RteCurve at_points;
      for (double r : distances) {
        const int col = column_for_distance(r);
        // locate the column inside the output set
        bool found = false;
        for (std::size_t i = 0; i < full.distance.size(); ++i) {
          if (std::lround(full.distance[i] / cfg_.grid.dx) == col) {
            at_points.distance.push_back(full.distance[i]);
            at_points.power_w.push_back(full.power_w[i]);
            at_points.power_norm.push_back(full.power_norm[i]);
            at_points.ber.push_back(full.ber[i]);
            found = true;
            break;
          }
        }
        if (!found) throw ConfigError("compare distance outside the reported range");
      }
      const std::vector<McPoint> points = mc_points(distances);
      for (const auto& p : points) {
        if (!(p.captured_fraction > 0.0)) {
          std::ostringstream msg;
          msg << "no captured photons at distance " << p.distance << " m with " << p.n_photons
              << " photons";
          throw McError(msg.str());
        }
      }
      write_compare_csv(file("compare.csv"), at_points, points);
      written.push_back("compare.csv");
      if (cfg_.emit_plots) {
        std::vector<double> mc_vals;
        for (const auto& p : points) mc_vals.push_back(p.captured_fraction);
        write_line_plot(file("rte_vs_mc.svg"), "Normalized power: solver vs photon tracking",
                        "distance, m", "normalized power", true,
                        {{"rte", at_points.distance, normalize_to_first(at_points.power_norm)},
                         {"mc", at_points.distance, normalize_to_first(mc_vals)}});
        written.push_back("rte_vs_mc.svg");
      }
      break;
    }
  }

  if (cfg_.dump_weights) {
    std::ofstream out(file("weights.csv"), std::ios::binary);
    write_csv(weights_, out);
    written.push_back("weights.csv");
  }
  if (cfg_.dump_field) {
    // Final stationary field; gives the mode-independent snapshot surface.
    TiOptions opts;
    opts.max_sweeps = cfg_.ti_sweeps;
    opts.gauss_seidel = cfg_.gauss_seidel;
    opts.source_scaling = cfg_.source_scaling;
    const RadianceField field = ti_solve(cfg_.grid, angles_, weights_, cfg_.water, source_, opts);
    std::ofstream out(file("field.csv"), std::ios::binary);
    write_csv(field, out);
    written.push_back("field.csv");
  }

  derived["rows"] = cfg_.grid.rows();
  derived["cols"] = cfg_.grid.cols();
  derived["time_steps"] = cfg_.grid.time_steps();
  derived["directions"] = angles_.count();
  derived["cfl"] = cfg_.grid.cfl_number(cfg_.water.attenuation);
  derived["first_angle_rad"] = angles_.phi.front();
  derived["lloyd_converged"] = angles_.converged;
  derived["lloyd_iterations"] = angles_.iterations;
  derived["lloyd_mse"] = angles_.mse;
  derived["fov_directions"] = fov_.count();
  derived["rings"] = static_cast<int>(areas_.size());
  derived["source_radiance"] = source_.radiance;

  nlohmann::json manifest;
  manifest["tool"] = "uowc-rte";
  manifest["version"] = "0.1.0";
  manifest["mode"] = to_string(cfg_.mode);
  manifest["config"] = nlohmann::json::parse(config_to_json_text(cfg_));
  manifest["derived"] = derived;
  manifest["timings_s"] = {{"lloyd", timings_.lloyd_s},
                           {"weights", timings_.weights_s},
                           {"rte", timings_.rte_s},
                           {"mc", timings_.mc_s}};
  manifest["outputs"] = written;
  write_text(file("manifest.json"), manifest.dump(2) + "\n");
  written.push_back("manifest.json");

  if (verbose) {
    for (const auto& f : written) std::fprintf(stderr, "wrote %s\n", file(f).c_str());
  }
  return written;
}

}  // namespace uowc
