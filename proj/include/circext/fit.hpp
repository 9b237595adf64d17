#pragma once

#include <string>
#include <vector>

namespace circext {

enum class FitKind { power_law, log_linear };

struct FitReport {
  FitKind kind = FitKind::power_law;
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  int n_points = 0;
};

/// OLS on (log x, log y) for power_law, (log x, y) for log_linear.
/// Pairs with NaN in either coordinate are dropped; needs >= 3 usable points
/// and nondegenerate x (throws std::invalid_argument otherwise).
FitReport fit_scaling(const std::vector<double>& x, const std::vector<double>& y,
                      FitKind kind);

std::string fit_kind_name(FitKind kind);

}  // namespace circext
