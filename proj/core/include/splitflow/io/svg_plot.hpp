#pragma once

#include <string>
#include <utility>
#include <vector>

namespace splitflow::io {

/// Input for a static log-log scatter plot with an optional fitted-slope
/// annotation; points are (x, y) with positive coordinates (nonpositive
/// points are skipped).
struct LogLogPlot {
  std::string title;
  std::string x_label = "h";
  std::string y_label = "error";
  std::vector<std::pair<double, double>> points;
  double slope = 0.0;
  bool has_slope = false;
  std::string annotation;  // extra note, e.g. "fit skipped"
};

void write_loglog_svg(const std::string& path, const LogLogPlot& plot);

}  // namespace splitflow::io
