#include "beamnet/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <tuple>

namespace beamnet {

namespace {

constexpr double kWidth = 840.0;
constexpr double kHeight = 560.0;
constexpr double kMarginLeft = 72.0;
constexpr double kMarginRight = 180.0;
constexpr double kMarginTop = 48.0;
constexpr double kMarginBottom = 64.0;

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

std::string num(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

struct PlotPoint {
  double density;
  double mean;
  double ci;  // NaN when undefined
};

}  // namespace

void emit_svg_plot(const std::vector<SummaryRow>& rows,
                   const std::string& metric, double field_size,
                   std::ostream& out) {
  std::map<std::pair<int, std::string>, std::vector<PlotPoint>> series;
  for (const SummaryRow& row : rows) {
    if (row.metric != metric) continue;
    const double density = row.n / (field_size * field_size);
    const double ci = row.ci_defined
                          ? row.ci95_halfwidth
                          : std::numeric_limits<double>::quiet_NaN();
    series[{row.gradient, row.mode}].push_back({density, row.mean, ci});
  }
  for (auto& [key, pts] : series)
    std::sort(pts.begin(), pts.end(),
              [](const PlotPoint& a, const PlotPoint& b) {
                return a.density < b.density;
              });

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << ' '
      << kHeight << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << kWidth / 2 << "\" y=\"24\" font-size=\"18\" "
      << "text-anchor=\"middle\" font-family=\"sans-serif\">" << metric
      << " vs density</text>\n";

  if (series.empty()) {
    out << "<text x=\"" << kWidth / 2 << "\" y=\"" << kHeight / 2
        << "\" font-size=\"14\" text-anchor=\"middle\" "
        << "font-family=\"sans-serif\">no data</text>\n</svg>\n";
    return;
  }

  double min_x = 1e300, max_x = -1e300, min_y = 1e300, max_y = -1e300;
  for (const auto& [key, pts] : series)
    for (const PlotPoint& p : pts) {
      min_x = std::min(min_x, p.density);
      max_x = std::max(max_x, p.density);
      const double ci = std::isnan(p.ci) ? 0.0 : p.ci;
      min_y = std::min(min_y, p.mean - ci);
      max_y = std::max(max_y, p.mean + ci);
    }
  if (max_x == min_x) {
    min_x -= 0.5;
    max_x += 0.5;
  }
  if (max_y == min_y) {
    min_y -= 0.5;
    max_y += 0.5;
  }
  const double pad_y = 0.05 * (max_y - min_y);
  min_y -= pad_y;
  max_y += pad_y;

  const double plot_w = kWidth - kMarginLeft - kMarginRight;
  const double plot_h = kHeight - kMarginTop - kMarginBottom;
  auto sx = [&](double x) {
    return kMarginLeft + (x - min_x) / (max_x - min_x) * plot_w;
  };
  auto sy = [&](double y) {
    return kMarginTop + plot_h - (y - min_y) / (max_y - min_y) * plot_h;
  };

  // axes and ticks
  out << "<g stroke=\"#333\" stroke-width=\"1\">\n";
  out << "<line x1=\"" << num(kMarginLeft) << "\" y1=\""
      << num(kMarginTop + plot_h) << "\" x2=\"" << num(kMarginLeft + plot_w)
      << "\" y2=\"" << num(kMarginTop + plot_h) << "\"/>\n";
  out << "<line x1=\"" << num(kMarginLeft) << "\" y1=\"" << num(kMarginTop)
      << "\" x2=\"" << num(kMarginLeft) << "\" y2=\""
      << num(kMarginTop + plot_h) << "\"/>\n";
  out << "</g>\n";
  out << "<g font-size=\"11\" font-family=\"sans-serif\" fill=\"#333\">\n";
  constexpr int kTicks = 5;
  for (int i = 0; i <= kTicks; ++i) {
    const double fx = min_x + (max_x - min_x) * i / kTicks;
    const double fy = min_y + (max_y - min_y) * i / kTicks;
    out << "<line stroke=\"#333\" x1=\"" << num(sx(fx)) << "\" y1=\""
        << num(kMarginTop + plot_h) << "\" x2=\"" << num(sx(fx)) << "\" y2=\""
        << num(kMarginTop + plot_h + 5) << "\"/>\n";
    out << "<text x=\"" << num(sx(fx)) << "\" y=\""
        << num(kMarginTop + plot_h + 20) << "\" text-anchor=\"middle\">"
        << num(fx) << "</text>\n";
    out << "<line stroke=\"#333\" x1=\"" << num(kMarginLeft - 5) << "\" y1=\""
        << num(sy(fy)) << "\" x2=\"" << num(kMarginLeft) << "\" y2=\""
        << num(sy(fy)) << "\"/>\n";
    out << "<text x=\"" << num(kMarginLeft - 9) << "\" y=\""
        << num(sy(fy) + 4) << "\" text-anchor=\"end\">" << num(fy)
        << "</text>\n";
  }
  out << "<text x=\"" << num(kMarginLeft + plot_w / 2) << "\" y=\""
      << num(kHeight - 16) << "\" text-anchor=\"middle\">density (n / L^2)"
      << "</text>\n";
  out << "<text transform=\"translate(20," << num(kMarginTop + plot_h / 2)
      << ") rotate(-90)\" text-anchor=\"middle\">" << metric << "</text>\n";
  out << "</g>\n";

  std::size_t color_index = 0;
  double legend_y = kMarginTop + 10;
  for (const auto& [key, pts] : series) {
    const char* color = kPalette[color_index % (sizeof kPalette /
                                                sizeof kPalette[0])];
    ++color_index;
    std::ostringstream path;
    for (std::size_t i = 0; i < pts.size(); ++i)
      path << (i == 0 ? "M" : " L") << num(sx(pts[i].density)) << ' '
           << num(sy(pts[i].mean));
    out << "<path d=\"" << path.str() << "\" fill=\"none\" stroke=\"" << color
        << "\" stroke-width=\"1.8\"/>\n";
    for (const PlotPoint& p : pts) {
      out << "<circle cx=\"" << num(sx(p.density)) << "\" cy=\""
          << num(sy(p.mean)) << "\" r=\"2.6\" fill=\"" << color << "\"/>\n";
      if (!std::isnan(p.ci) && p.ci > 0.0) {
        out << "<line x1=\"" << num(sx(p.density)) << "\" y1=\""
            << num(sy(p.mean - p.ci)) << "\" x2=\"" << num(sx(p.density))
            << "\" y2=\"" << num(sy(p.mean + p.ci)) << "\" stroke=\"" << color
            << "\" stroke-width=\"1\"/>\n";
      }
    }
    out << "<rect x=\"" << num(kWidth - kMarginRight + 12) << "\" y=\""
        << num(legend_y - 9) << "\" width=\"12\" height=\"12\" fill=\""
        << color << "\"/>\n";
    out << "<text x=\"" << num(kWidth - kMarginRight + 30) << "\" y=\""
        << num(legend_y + 1)
        << "\" font-size=\"12\" font-family=\"sans-serif\">g=" << key.first
        << ' ' << key.second << "</text>\n";
    legend_y += 20;
  }
  out << "</svg>\n";
}

}  // namespace beamnet
