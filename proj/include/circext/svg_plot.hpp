#pragma once

#include <string>
#include <vector>

#include "circext/sweep.hpp"

namespace circext {

struct PlotSpec {
  std::string y_column = "ratio";  // SweepRecord field to plot
  std::string title = "";
  bool with_fit = true;            // log-linear fit overlay per measure
  int width = 720;
  int height = 480;
};

/// Static log-x scatter, one polyline+markers per measure (legend keyed by
/// s), deterministic bytes for identical input.  Throws on empty input.
std::string emit_plot(const std::vector<SweepRecord>& records,
                      const PlotSpec& spec);

}  // namespace circext
