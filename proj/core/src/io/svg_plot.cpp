#include "splitflow/io/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "splitflow/errors.hpp"

namespace splitflow::io {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 480.0;
constexpr double kMarginLeft = 80.0;
constexpr double kMarginRight = 30.0;
constexpr double kMarginTop = 50.0;
constexpr double kMarginBottom = 60.0;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string pow10_label(int exponent) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "1e%d", exponent);
  return buf;
}

}  // namespace

void write_loglog_svg(const std::string& path, const LogLogPlot& plot) {
  std::vector<std::pair<double, double>> pts;
  for (const auto& [x, y] : plot.points) {
    if (x > 0.0 && y > 0.0 && std::isfinite(x) && std::isfinite(y)) {
      pts.emplace_back(std::log10(x), std::log10(y));
    }
  }

  double x_lo = -1.0, x_hi = 0.0, y_lo = -1.0, y_hi = 0.0;
  if (!pts.empty()) {
    x_lo = x_hi = pts[0].first;
    y_lo = y_hi = pts[0].second;
    for (const auto& [x, y] : pts) {
      x_lo = std::min(x_lo, x);
      x_hi = std::max(x_hi, x);
      y_lo = std::min(y_lo, y);
      y_hi = std::max(y_hi, y);
    }
  }
  const double x_pad = std::max(0.25, 0.05 * (x_hi - x_lo));
  const double y_pad = std::max(0.25, 0.05 * (y_hi - y_lo));
  x_lo -= x_pad;
  x_hi += x_pad;
  y_lo -= y_pad;
  y_hi += y_pad;

  const double plot_w = kWidth - kMarginLeft - kMarginRight;
  const double plot_h = kHeight - kMarginTop - kMarginBottom;
  auto sx = [&](double lx) {
    return kMarginLeft + (lx - x_lo) / (x_hi - x_lo) * plot_w;
  };
  auto sy = [&](double ly) {
    return kMarginTop + (y_hi - ly) / (y_hi - y_lo) * plot_h;
  };

  std::ofstream out(path);
  if (!out) throw Error("cannot open '" + path + "' for writing");

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << ' '
      << kHeight << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << kWidth / 2 << "\" y=\"28\" text-anchor=\"middle\" "
      << "font-family=\"sans-serif\" font-size=\"16\">" << plot.title
      << "</text>\n";

  // Frame.
  out << "<rect x=\"" << fmt(kMarginLeft) << "\" y=\"" << fmt(kMarginTop)
      << "\" width=\"" << fmt(plot_w) << "\" height=\"" << fmt(plot_h)
      << "\" fill=\"none\" stroke=\"black\"/>\n";

  // Decade gridlines and tick labels.
  for (int e = static_cast<int>(std::ceil(x_lo)); e <= static_cast<int>(std::floor(x_hi)); ++e) {
    const double px = sx(e);
    out << "<line x1=\"" << fmt(px) << "\" y1=\"" << fmt(kMarginTop)
        << "\" x2=\"" << fmt(px) << "\" y2=\"" << fmt(kMarginTop + plot_h)
        << "\" stroke=\"#dddddd\"/>\n";
    out << "<text x=\"" << fmt(px) << "\" y=\"" << fmt(kMarginTop + plot_h + 20)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
        << "font-size=\"11\">" << pow10_label(e) << "</text>\n";
  }
  for (int e = static_cast<int>(std::ceil(y_lo)); e <= static_cast<int>(std::floor(y_hi)); ++e) {
    const double py = sy(e);
    out << "<line x1=\"" << fmt(kMarginLeft) << "\" y1=\"" << fmt(py)
        << "\" x2=\"" << fmt(kMarginLeft + plot_w) << "\" y2=\"" << fmt(py)
        << "\" stroke=\"#dddddd\"/>\n";
    out << "<text x=\"" << fmt(kMarginLeft - 8) << "\" y=\"" << fmt(py + 4)
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" "
        << "font-size=\"11\">" << pow10_label(e) << "</text>\n";
  }

  // Axis labels.
  out << "<text x=\"" << kWidth / 2 << "\" y=\"" << kHeight - 15
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
      << "font-size=\"13\">" << plot.x_label << "</text>\n";
  out << "<text x=\"20\" y=\"" << kHeight / 2
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
      << "font-size=\"13\" transform=\"rotate(-90 20 " << kHeight / 2 << ")\">"
      << plot.y_label << "</text>\n";

  // Data polyline and markers.
  if (pts.size() > 1) {
    out << "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\" points=\"";
    for (const auto& [lx, ly] : pts) out << fmt(sx(lx)) << ',' << fmt(sy(ly)) << ' ';
    out << "\"/>\n";
  }
  for (const auto& [lx, ly] : pts) {
    out << "<circle cx=\"" << fmt(sx(lx)) << "\" cy=\"" << fmt(sy(ly))
        << "\" r=\"3.5\" fill=\"#1f77b4\"/>\n";
  }

  // Slope annotation.
  if (plot.has_slope) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "fitted slope = %.3f", plot.slope);
    out << "<text x=\"" << fmt(kMarginLeft + 12) << "\" y=\""
        << fmt(kMarginTop + 22)
        << "\" font-family=\"sans-serif\" font-size=\"13\" fill=\"#d62728\">"
        << buf << "</text>\n";
  }
  if (!plot.annotation.empty()) {
    out << "<text x=\"" << fmt(kMarginLeft + 12) << "\" y=\""
        << fmt(kMarginTop + 42)
        << "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#555555\">"
        << plot.annotation << "</text>\n";
  }
  out << "</svg>\n";
}

}  // namespace splitflow::io
