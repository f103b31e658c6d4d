// SPDX-License-Identifier: Apache-2.0
//
// uowc-rte: a deterministic radiative-transfer channel solver for
// underwater optical wireless links.

#pragma once

#include <string>
#include <vector>

namespace uowc {

struct PlotSeries {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

/// Static line plot, optionally with a log10 y axis (non-positive samples
/// are skipped there).
void write_line_plot(const std::string& path, const std::string& title,
                     const std::string& x_label, const std::string& y_label, bool log_y,
                     const std::vector<PlotSeries>& series);

/// Static heatmap of values(row, col) over the y/x axes; log10 color scale
/// when requested.
void write_heatmap(const std::string& path, const std::string& title, const std::string& x_label,
                   const std::string& y_label, const std::vector<double>& x,
                   const std::vector<double>& y, const std::vector<double>& values_row_major,
                   bool log_scale);

}  // namespace uowc
