#include "circext/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>

#include "circext/fit.hpp"

namespace circext {

namespace {

const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                         "#ff7f0e", "#8c564b"};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

double record_field(const SweepRecord& r, const std::string& col) {
  if (col == "energy") return r.energy;
  if (col == "m_r") return r.m_r;
  if (col == "ratio") return r.ratio;
  if (col == "extremizer_rayleigh") return r.extremizer_rayleigh;
  if (col == "knapp_rayleigh") return r.knapp_rayleigh;
  throw std::invalid_argument("emit_plot: unknown column " + col);
}

}  // namespace

std::string emit_plot(const std::vector<SweepRecord>& records,
                      const PlotSpec& spec) {
  if (records.empty()) throw std::invalid_argument("emit_plot: no records");

  struct Series {
    double s = 0.0;
    std::vector<std::pair<double, double>> pts;  // (log2 R, y)
  };
  std::map<std::string, Series> series;  // keyed by measure id, file order
  std::vector<std::string> order;
  for (const auto& r : records) {
    double y = record_field(r, spec.y_column);
    if (std::isnan(y) || std::isnan(r.R)) continue;
    if (!series.count(r.measure_id)) order.push_back(r.measure_id);
    auto& s = series[r.measure_id];
    s.s = r.s;
    s.pts.emplace_back(std::log2(r.R), y);
  }
  if (order.empty()) throw std::invalid_argument("emit_plot: no plottable points");

  double x_lo = 1e300, x_hi = -1e300, y_lo = 1e300, y_hi = -1e300;
  for (const auto& id : order)
    for (auto [x, y] : series[id].pts) {
      x_lo = std::min(x_lo, x), x_hi = std::max(x_hi, x);
      y_lo = std::min(y_lo, y), y_hi = std::max(y_hi, y);
    }
  if (x_hi <= x_lo) x_hi = x_lo + 1.0;
  if (y_hi <= y_lo) y_hi = y_lo + 1.0;
  double pad_y = 0.08 * (y_hi - y_lo);
  y_lo -= pad_y, y_hi += pad_y;

  const double W = spec.width, H = spec.height;
  const double ml = 64, mr = 16, mt = 36, mb = 44;
  auto px = [&](double x) { return ml + (x - x_lo) / (x_hi - x_lo) * (W - ml - mr); };
  auto py = [&](double y) { return H - mb - (y - y_lo) / (y_hi - y_lo) * (H - mt - mb); };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << spec.width
      << "\" height=\"" << spec.height << "\" viewBox=\"0 0 " << spec.width
      << " " << spec.height << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (!spec.title.empty())
    svg << "<text x=\"" << num(W / 2) << "\" y=\"22\" text-anchor=\"middle\" "
           "font-family=\"sans-serif\" font-size=\"15\">" << spec.title
        << "</text>\n";
  // Axes.
  svg << "<line x1=\"" << num(ml) << "\" y1=\"" << num(H - mb) << "\" x2=\""
      << num(W - mr) << "\" y2=\"" << num(H - mb)
      << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  svg << "<line x1=\"" << num(ml) << "\" y1=\"" << num(mt) << "\" x2=\""
      << num(ml) << "\" y2=\"" << num(H - mb)
      << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  svg << "<text x=\"" << num(W / 2) << "\" y=\"" << num(H - 10)
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"12\">log2 R</text>\n";
  svg << "<text x=\"14\" y=\"" << num(H / 2)
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" "
         "transform=\"rotate(-90 14 " << num(H / 2) << ")\">" << spec.y_column
      << "</text>\n";

  int ci = 0;
  for (const auto& id : order) {
    const auto& s = series[id];
    const char* color = kColors[ci % 6];
    std::ostringstream pl;
    for (std::size_t i = 0; i < s.pts.size(); ++i)
      pl << (i ? " " : "") << num(px(s.pts[i].first)) << ","
         << num(py(s.pts[i].second));
    if (s.pts.size() > 1)
      svg << "<polyline points=\"" << pl.str() << "\" fill=\"none\" stroke=\""
          << color << "\" stroke-width=\"1\" stroke-dasharray=\"3,3\"/>\n";
    for (auto [x, y] : s.pts)
      svg << "<circle cx=\"" << num(px(x)) << "\" cy=\"" << num(py(y))
          << "\" r=\"3.5\" fill=\"" << color << "\"/>\n";
    if (spec.with_fit && s.pts.size() >= 3) {
      std::vector<double> xs, ys;
      for (auto [x, y] : s.pts) xs.push_back(std::exp2(x)), ys.push_back(y);
      try {
        FitReport fr = fit_scaling(xs, ys, FitKind::log_linear);
        double lg2 = std::log(2.0);
        double ya = fr.intercept + fr.slope * x_lo * lg2;
        double yb = fr.intercept + fr.slope * x_hi * lg2;
        svg << "<line x1=\"" << num(px(x_lo)) << "\" y1=\"" << num(py(ya))
            << "\" x2=\"" << num(px(x_hi)) << "\" y2=\"" << num(py(yb))
            << "\" stroke=\"" << color << "\" stroke-width=\"1.5\"/>\n";
      } catch (const std::exception&) {
      }
    }
    svg << "<text x=\"" << num(W - mr - 8) << "\" y=\"" << num(mt + 16 + 16 * ci)
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\" "
           "fill=\"" << color << "\">" << id << " (s=" << num(s.s)
        << ")</text>\n";
    ++ci;
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace circext
