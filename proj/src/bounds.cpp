#include "circext/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace circext {

namespace {

constexpr std::int64_t kAtomCap = 1 << 22;

// Sorted atom positions at a generation fine enough that a cylinder is at
// most window/denom long; capped by atom count (the window max is then still
// exact up to two boundary cylinders).
std::vector<double> atoms_for_window(const SelfSimilarMeasure& mu, double window,
                                     double denom, int* gen_out) {
  int g = 0;
  double len = 1.0;
  std::int64_t count = 1;
  while (len > window / denom && count * mu.branch_count() <= kAtomCap && g < 60) {
    len *= mu.ratio();
    count *= mu.branch_count();
    ++g;
  }
  if (gen_out) *gen_out = g;
  auto ap = mu.atoms(g, kAtomCap);
  std::vector<double> pos;
  pos.reserve(ap.atoms.size());
  for (const auto& a : ap.atoms) pos.push_back(a.position);
  return pos;
}

// Max number of sorted positions inside any closed window of given length,
// with wrap-around; two-pointer sweep anchored at each atom.
std::size_t max_window_count(const std::vector<double>& pos, double window,
                             double* center_out) {
  std::size_t n = pos.size();
  std::size_t best = 0, j = 0;
  double best_center = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (j < i) j = i;
    while (j + 1 < i + n) {
      double pj = pos[(j + 1) % n] + ((j + 1) >= n ? 1.0 : 0.0);
      if (pj - pos[i] <= window) ++j; else break;
    }
    std::size_t cnt = j - i + 1;
    if (cnt > best) {
      best = cnt;
      double pj = pos[j % n] + (j >= n ? 1.0 : 0.0);
      best_center = 0.5 * (pos[i] + pj);
      best_center -= std::floor(best_center);
    }
  }
  if (center_out) *center_out = best_center;
  return best;
}

}  // namespace

double best_arc_center(const SelfSimilarMeasure& mu, double window,
                       double* mass_out) {
  std::vector<double> pos = atoms_for_window(mu, window, 16.0, nullptr);
  double center = 0.0;
  std::size_t cnt = max_window_count(pos, window, &center);
  if (mass_out) *mass_out = static_cast<double>(cnt) / pos.size();
  return center;
}

double predicted_m_r(double s, double R) {
  if (s < 0.0 || s > 1.0) throw std::invalid_argument("predicted_m_r: s in [0,1]");
  if (R < 1.0) throw std::invalid_argument("predicted_m_r: R >= 1");
  return (s >= 0.5) ? std::pow(R, (2.0 - s) / 3.0) : std::pow(R, 1.0 - s);
}

MRResult m_r(const SelfSimilarMeasure& mu, double R, int alphas_per_octave,
             MrMode mode) {
  if (R < 8.0) throw std::invalid_argument("m_r: need R >= 8");
  if (alphas_per_octave < 1) throw std::invalid_argument("m_r: grid too coarse");
  double alpha_lo = 1.0 / R;
  double alpha_hi = std::pow(R, -2.0 / 3.0);

  // Geometric grid from alpha_hi down, endpoints included.
  std::vector<double> alphas;
  double step = std::pow(2.0, -1.0 / alphas_per_octave);
  for (double a = alpha_hi; a > alpha_lo * (1.0 + 1e-12); a *= step)
    alphas.push_back(a);
  alphas.push_back(alpha_lo);

  MRResult out;
  out.R = R;
  out.mode = mode;
  for (double alpha : alphas) {
    double window = alpha * alpha * R;
    int gen = 0;
    std::vector<double> pos = atoms_for_window(mu, window, 16.0, &gen);
    double center = 0.0;
    std::size_t cnt = max_window_count(pos, window, &center);
    double mass = static_cast<double>(cnt) / pos.size();
    double val = mass / alpha;
    if (val > out.value) {
      out.value = val;
      out.alpha_star = alpha;
      out.arc_center = center;
    }
  }

  if (mode == MrMode::rectangle) {
    // Diagnostic: sample planar alpha x alpha^2 R rectangles rotated about
    // the tangent point on the circumference-1 circle; the tangent
    // placement should stay within a bounded factor of the pure arc scan.
    double rho0 = 1.0 / (2.0 * std::numbers::pi);
    double best_rect = 0.0;
    std::vector<double> tilts{0.0, 0.02, -0.02, 0.06, -0.06, 0.15, -0.15};
    for (double alpha : alphas) {
      double window = alpha * alpha * R;
      std::vector<double> pos = atoms_for_window(mu, window, 16.0, nullptr);
      double center = 0.0;
      max_window_count(pos, window, &center);
      double theta_c = 2.0 * std::numbers::pi * center;
      double tx = rho0 * std::cos(theta_c), ty = rho0 * std::sin(theta_c);
      std::size_t n = pos.size();
      for (double tilt : tilts) {
        double psi = theta_c + 0.5 * std::numbers::pi + tilt;  // long axis
        double ux = std::cos(psi), uy = std::sin(psi);
        double wx = -std::cos(theta_c + tilt), wy = -std::sin(theta_c + tilt);
        std::size_t cnt = 0;
        for (std::size_t i = 0; i < n; ++i) {
          double ang = 2.0 * std::numbers::pi * pos[i];
          double dx = rho0 * std::cos(ang) - tx, dy = rho0 * std::sin(ang) - ty;
          double u = dx * ux + dy * uy;           // along the long side
          double w = dx * wx + dy * wy;           // inward depth
          if (std::fabs(u) <= 0.5 * window && w >= -1e-15 && w <= alpha) ++cnt;
        }
        double val = (static_cast<double>(cnt) / n) / alpha;
        best_rect = std::max(best_rect, val);
      }
    }
    out.rectangle_ratio = best_rect / std::max(out.value, 1e-300);
  }
  return out;
}

}  // namespace circext
