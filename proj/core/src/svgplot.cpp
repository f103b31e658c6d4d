// SPDX-License-Identifier: Apache-2.0
//
// uowc-rte: a deterministic radiative-transfer channel solver for
// underwater optical wireless links.

#include "uowc/svgplot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

#include "uowc/errors.hpp"

namespace uowc {

namespace {

constexpr int kWidth = 720;
constexpr int kHeight = 480;
constexpr int kMarginLeft = 80;
constexpr int kMarginRight = 30;
constexpr int kMarginTop = 50;
constexpr int kMarginBottom = 60;

const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

struct Axis {
  double lo = 0.0, hi = 1.0;
  double to_px(double v, double px_lo, double px_hi) const {
    const double t = (v - lo) / (hi - lo);
    return px_lo + t * (px_hi - px_lo);
  }
};

std::vector<double> linear_ticks(double lo, double hi, int target = 6) {
  std::vector<double> ticks;
  const double span = hi - lo;
  if (!(span > 0.0)) return {lo};
  double step = std::pow(10.0, std::floor(std::log10(span / target)));
  for (double mult : {1.0, 2.0, 5.0, 10.0}) {
    if (span / (step * mult) <= target) {
      step *= mult;
      break;
    }
  }
  double first = std::ceil(lo / step) * step;
  for (double v = first; v <= hi + 0.5 * step; v += step) ticks.push_back(v);
  return ticks;
}

}  // namespace

void write_line_plot(const std::string& path, const std::string& title,
                     const std::string& x_label, const std::string& y_label, bool log_y,
                     const std::vector<PlotSeries>& series) {
  double x_lo = std::numeric_limits<double>::infinity(), x_hi = -x_lo;
  double y_lo = x_lo, y_hi = -x_lo;
  for (const auto& s : series) {
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      const double y = s.y[i];
      if (log_y && !(y > 0.0)) continue;
      x_lo = std::min(x_lo, s.x[i]);
      x_hi = std::max(x_hi, s.x[i]);
      const double yv = log_y ? std::log10(y) : y;
      y_lo = std::min(y_lo, yv);
      y_hi = std::max(y_hi, yv);
    }
  }
  if (!(x_hi > x_lo)) { x_lo -= 0.5; x_hi += 0.5; }
  if (!(y_hi > y_lo)) { y_lo -= 0.5; y_hi += 0.5; }
  const double pad = 0.04 * (y_hi - y_lo);
  Axis ax{x_lo, x_hi};
  Axis ay{y_lo - pad, y_hi + pad};

  const double px0 = kMarginLeft, px1 = kWidth - kMarginRight;
  const double py0 = kHeight - kMarginBottom, py1 = kMarginTop;

  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write plot file '" + path + "'");
  out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << kWidth << "' height='" << kHeight
      << "' viewBox='0 0 " << kWidth << " " << kHeight << "'>\n"
      << "<rect width='100%' height='100%' fill='white'/>\n"
      << "<text x='" << kWidth / 2 << "' y='24' text-anchor='middle' font-size='16'>" << title
      << "</text>\n";

  // frame + grid
  out << "<rect x='" << px0 << "' y='" << py1 << "' width='" << (px1 - px0) << "' height='"
      << (py0 - py1) << "' fill='none' stroke='black'/>\n";
  for (double t : linear_ticks(ax.lo, ax.hi)) {
    const double px = ax.to_px(t, px0, px1);
    out << "<line x1='" << px << "' y1='" << py0 << "' x2='" << px << "' y2='" << py1
        << "' stroke='#dddddd'/>\n"
        << "<text x='" << px << "' y='" << py0 + 18 << "' text-anchor='middle' font-size='11'>"
        << fmt(t) << "</text>\n";
  }
  if (log_y) {
    const int d_lo = static_cast<int>(std::floor(ay.lo));
    const int d_hi = static_cast<int>(std::ceil(ay.hi));
    for (int d = d_lo; d <= d_hi; ++d) {
      if (d < ay.lo || d > ay.hi) continue;
      const double py = ay.to_px(d, py0, py1);
      out << "<line x1='" << px0 << "' y1='" << py << "' x2='" << px1 << "' y2='" << py
          << "' stroke='#dddddd'/>\n"
          << "<text x='" << px0 - 6 << "' y='" << py + 4
          << "' text-anchor='end' font-size='11'>1e" << d << "</text>\n";
    }
  } else {
    for (double t : linear_ticks(ay.lo, ay.hi)) {
      const double py = ay.to_px(t, py0, py1);
      out << "<line x1='" << px0 << "' y1='" << py << "' x2='" << px1 << "' y2='" << py
          << "' stroke='#dddddd'/>\n"
          << "<text x='" << px0 - 6 << "' y='" << py + 4 << "' text-anchor='end' font-size='11'>"
          << fmt(t) << "</text>\n";
    }
  }
  out << "<text x='" << (px0 + px1) / 2 << "' y='" << kHeight - 14
      << "' text-anchor='middle' font-size='13'>" << x_label << "</text>\n"
      << "<text x='18' y='" << (py0 + py1) / 2 << "' text-anchor='middle' font-size='13' "
      << "transform='rotate(-90 18 " << (py0 + py1) / 2 << ")'>" << y_label << "</text>\n";

  int color = 0;
  double legend_y = py1 + 16;
  for (const auto& s : series) {
    const char* c = kColors[color % 6];
    out << "<polyline fill='none' stroke='" << c << "' stroke-width='1.6' points='";
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      const double y = s.y[i];
      if (log_y && !(y > 0.0)) continue;
      const double yv = log_y ? std::log10(y) : y;
      out << ax.to_px(s.x[i], px0, px1) << "," << ay.to_px(yv, py0, py1) << " ";
    }
    out << "'/>\n";
    if (!s.label.empty()) {
      out << "<line x1='" << px1 - 150 << "' y1='" << legend_y << "' x2='" << px1 - 120
          << "' y2='" << legend_y << "' stroke='" << c << "' stroke-width='2'/>\n"
          << "<text x='" << px1 - 114 << "' y='" << legend_y + 4 << "' font-size='12'>" << s.label
          << "</text>\n";
      legend_y += 16;
    }
    ++color;
  }
  out << "</svg>\n";
}

void write_heatmap(const std::string& path, const std::string& title, const std::string& x_label,
                   const std::string& y_label, const std::vector<double>& x,
                   const std::vector<double>& y, const std::vector<double>& values_row_major,
                   bool log_scale) {
  const std::size_t nx = x.size(), ny = y.size();
  if (values_row_major.size() != nx * ny) {
    throw ConfigError("heatmap value count does not match the axes");
  }
  double v_lo = std::numeric_limits<double>::infinity(), v_hi = -v_lo;
  for (double v : values_row_major) {
    if (log_scale && !(v > 0.0)) continue;
    const double t = log_scale ? std::log10(v) : v;
    v_lo = std::min(v_lo, t);
    v_hi = std::max(v_hi, t);
  }
  if (!(v_hi > v_lo)) { v_lo -= 1.0; v_hi += 1.0; }
  if (log_scale) v_lo = std::max(v_lo, v_hi - 8.0);  // clip 8 decades

  const double px0 = kMarginLeft, px1 = kWidth - kMarginRight;
  const double py0 = kHeight - kMarginBottom, py1 = kMarginTop;
  const double cell_w = (px1 - px0) / nx;
  const double cell_h = (py0 - py1) / ny;

  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write plot file '" + path + "'");
  out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << kWidth << "' height='" << kHeight
      << "' viewBox='0 0 " << kWidth << " " << kHeight << "'>\n"
      << "<rect width='100%' height='100%' fill='white'/>\n"
      << "<text x='" << kWidth / 2 << "' y='24' text-anchor='middle' font-size='16'>" << title
      << "</text>\n";
  for (std::size_t r = 0; r < ny; ++r) {
    for (std::size_t c = 0; c < nx; ++c) {
      double v = values_row_major[r * nx + c];
      double t;
      if (log_scale) {
        t = v > 0.0 ? (std::log10(v) - v_lo) / (v_hi - v_lo) : 0.0;
      } else {
        t = (v - v_lo) / (v_hi - v_lo);
      }
      t = std::clamp(t, 0.0, 1.0);
      const int red = static_cast<int>(255 * t);
      const int blue = static_cast<int>(255 * (1.0 - t));
      const int green = static_cast<int>(80 * t);
      out << "<rect x='" << px0 + c * cell_w << "' y='" << py0 - (r + 1) * cell_h << "' width='"
          << cell_w + 0.5 << "' height='" << cell_h + 0.5 << "' fill='rgb(" << red << "," << green
          << "," << blue << ")'/>\n";
    }
  }
  out << "<rect x='" << px0 << "' y='" << py1 << "' width='" << (px1 - px0) << "' height='"
      << (py0 - py1) << "' fill='none' stroke='black'/>\n";
  out << "<text x='" << (px0 + px1) / 2 << "' y='" << kHeight - 14
      << "' text-anchor='middle' font-size='13'>" << x_label << "</text>\n"
      << "<text x='18' y='" << (py0 + py1) / 2 << "' text-anchor='middle' font-size='13' "
      << "transform='rotate(-90 18 " << (py0 + py1) / 2 << ")'>" << y_label << "</text>\n";
  out << "<text x='" << px0 << "' y='" << py0 + 34 << "' font-size='11'>scale: " << fmt(v_lo)
      << (log_scale ? " .. " : " .. ") << fmt(v_hi) << (log_scale ? " (log10)" : "") << "</text>\n";
  out << "</svg>\n";
}

}  // namespace uowc
