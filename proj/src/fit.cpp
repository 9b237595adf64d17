#include "circext/fit.hpp"

#include <cmath>
#include <stdexcept>

namespace circext {

FitReport fit_scaling(const std::vector<double>& x, const std::vector<double>& y,
                      FitKind kind) {
  if (x.size() != y.size())
    throw std::invalid_argument("fit_scaling: length mismatch");
  std::vector<double> u, v;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (std::isnan(x[i]) || std::isnan(y[i])) continue;
    if (!(x[i] > 0.0)) throw std::invalid_argument("fit_scaling: need x > 0");
    double uy = y[i];
    if (kind == FitKind::power_law) {
      if (!(y[i] > 0.0)) throw std::invalid_argument("fit_scaling: need y > 0");
      uy = std::log(y[i]);
    }
    u.push_back(std::log(x[i]));
    v.push_back(uy);
  }
  std::size_t n = u.size();
  if (n < 3) throw std::invalid_argument("fit_scaling: need >= 3 points");
  double mu = 0.0, mv = 0.0;
  for (std::size_t i = 0; i < n; ++i) mu += u[i], mv += v[i];
  mu /= n;
  mv /= n;
  double suu = 0.0, suv = 0.0, svv = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    suu += (u[i] - mu) * (u[i] - mu);
    suv += (u[i] - mu) * (v[i] - mv);
    svv += (v[i] - mv) * (v[i] - mv);
  }
  if (suu < 1e-18) throw std::invalid_argument("fit_scaling: degenerate x values");
  FitReport fr;
  fr.kind = kind;
  fr.slope = suv / suu;
  fr.intercept = mv - fr.slope * mu;
  fr.r_squared = (svv < 1e-30) ? 1.0 : (suv * suv) / (suu * svv);
  fr.n_points = static_cast<int>(n);
  return fr;
}

std::string fit_kind_name(FitKind kind) {
  return kind == FitKind::power_law ? "power_law" : "log_linear";
}

}  // namespace circext
