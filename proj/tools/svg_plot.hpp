#pragma once

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "bmvc/types.hpp"

// Just enough SVG to chart benchmark curves: axes, ticks, polylines, legend.
namespace plot {

struct Series {
  std::string label;
  std::vector<double> x, y;
};

namespace detail {

inline std::string fmt(double v) {
  std::ostringstream os;
  os.precision(4);
  os << v;
  return os.str();
}

// Tick positions: a round step close to range/5.
inline std::vector<double> ticks(double lo, double hi) {
  const double span = hi - lo;
  if (span <= 0.0) return {lo};
  const double raw = span / 5.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  double step = mag;
  for (double m : {1.0, 2.0, 5.0, 10.0})
    if (mag * m >= raw) {
      step = mag * m;
      break;
    }
  std::vector<double> out;
  for (double t = std::ceil(lo / step) * step; t <= hi + step * 1e-9; t += step) out.push_back(t);
  return out;
}

}  // namespace detail

inline void write_svg(const std::string& path, const std::string& title,
                      const std::string& x_label, const std::string& y_label,
                      const std::vector<Series>& series) {
  constexpr int kW = 660, kH = 440;
  constexpr double kL = 70, kR = 630, kT = 50, kB = 390;
  static const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  for (const Series& s : series)
    for (size_t i = 0; i < s.x.size(); ++i) {
      xmin = std::min(xmin, s.x[i]);
      xmax = std::max(xmax, s.x[i]);
      ymin = std::min(ymin, s.y[i]);
      ymax = std::max(ymax, s.y[i]);
    }
  if (xmin > xmax) {
    xmin = 0;
    xmax = 1;
  }
  if (ymin > ymax) {
    ymin = 0;
    ymax = 1;
  }
  if (xmax == xmin) xmax = xmin + 1;
  if (ymax == ymin) ymax = ymin + 1;
  const double ypad = 0.05 * (ymax - ymin);
  ymin -= ypad;
  ymax += ypad;

  auto px = [&](double x) { return kL + (x - xmin) / (xmax - xmin) * (kR - kL); };
  auto py = [&](double y) { return kB - (y - ymin) / (ymax - ymin) * (kB - kT); };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kW << "\" height=\"" << kH
      << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<text x=\"" << kW / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">" << title
      << "</text>\n";

  for (double t : detail::ticks(xmin, xmax)) {
    svg << "<line x1=\"" << px(t) << "\" y1=\"" << kT << "\" x2=\"" << px(t) << "\" y2=\"" << kB
        << "\" stroke=\"#e0e0e0\"/>\n";
    svg << "<text x=\"" << px(t) << "\" y=\"" << kB + 16 << "\" text-anchor=\"middle\">"
        << detail::fmt(t) << "</text>\n";
  }
  for (double t : detail::ticks(ymin, ymax)) {
    svg << "<line x1=\"" << kL << "\" y1=\"" << py(t) << "\" x2=\"" << kR << "\" y2=\"" << py(t)
        << "\" stroke=\"#e0e0e0\"/>\n";
    svg << "<text x=\"" << kL - 6 << "\" y=\"" << py(t) + 4 << "\" text-anchor=\"end\">"
        << detail::fmt(t) << "</text>\n";
  }
  svg << "<rect x=\"" << kL << "\" y=\"" << kT << "\" width=\"" << kR - kL << "\" height=\""
      << kB - kT << "\" fill=\"none\" stroke=\"black\"/>\n";
  svg << "<text x=\"" << (kL + kR) / 2 << "\" y=\"" << kH - 10 << "\" text-anchor=\"middle\">"
      << x_label << "</text>\n";
  svg << "<text x=\"18\" y=\"" << (kT + kB) / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
      << (kT + kB) / 2 << ")\">" << y_label << "</text>\n";

  for (size_t si = 0; si < series.size(); ++si) {
    const char* color = kColors[si % 6];
    svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\"";
    for (size_t i = 0; i < series[si].x.size(); ++i)
      svg << px(series[si].x[i]) << ',' << py(series[si].y[i]) << ' ';
    svg << "\"/>\n";
    for (size_t i = 0; i < series[si].x.size(); ++i)
      svg << "<circle cx=\"" << px(series[si].x[i]) << "\" cy=\"" << py(series[si].y[i])
          << "\" r=\"3\" fill=\"" << color << "\"/>\n";
    const double ly = kT + 16 + 18 * static_cast<double>(si);
    svg << "<line x1=\"" << kR - 130 << "\" y1=\"" << ly << "\" x2=\"" << kR - 106 << "\" y2=\""
        << ly << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
    svg << "<text x=\"" << kR - 100 << "\" y=\"" << ly + 4 << "\">" << series[si].label
        << "</text>\n";
  }
  svg << "</svg>\n";

  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw bmvc::DataError("cannot open for writing: " + path);
  out << svg.str();
}

}  // namespace plot
