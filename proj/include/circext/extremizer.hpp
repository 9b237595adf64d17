#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "circext/measure.hpp"
#include "circext/operator.hpp"

namespace circext {

/// Mollifier separation constant K in Delta_p = mu * (eta_{4^{-p-K}} - eta_{4^{-p}}).
/// K = 2 keeps the inner bump on its plateau across a whole 4-adic annulus.
inline constexpr int kLpK = 2;

/// Default admissibility floor: 4^p >= 16.
inline constexpr int kPMin = 2;

struct Band {
  int p;
  std::int64_t k_lo;  // frequencies k with R - k in [4^p R^{1/3}, 4^{p+1} R^{1/3})
  std::int64_t k_hi;
  bool degenerate = false;  // excluded: A_k fell below the admissibility floor
};

/// Disjoint left bands R + D_p^l for p = p_min .. p_max, one 4-adic annulus
/// each, with 4^{p_max} <= R^{2/3}/4^K (equivalently R^{1/3} 4^{p_max+K} <= R).
struct BandFamily {
  std::int64_t R = 0;
  std::vector<Band> members;

  std::int64_t k_min() const { return members.back().k_lo; }
  std::int64_t k_max() const { return members.front().k_hi; }
};

/// Throws std::length_error when no admissible p exists (R too small).
BandFamily band_family(double R, int p_min = kPMin);

/// The section-3 witness: coefficients a_k(r) on the shifted left bands.
struct Extremizer {
  std::int64_t R = 0;
  double r = 0.0;
  std::int64_t k_lo = 0;                     // first frequency of `coeffs`
  std::vector<std::complex<double>> coeffs;  // contiguous over [k_lo, k_hi]
  double norm_sq = 0.0;
  double rayleigh = 0.0;
  int bands_used = 0;
};

/// a_k(r) = Delta_p(mu)^(k - R) * sgn J_k(r) / (2^p A_k(R)) on band p.
/// The window averages A_k(R) are supplied (see average_abs_all); sgn 0 := +1.
Extremizer build_g(const FourierTable& table, const BandFamily& family,
                   double r, const std::vector<double>& window_averages);

/// R * mu-integral of |sum c_k J_k(r) e^{2 pi i k .}|^2 divided by sum |c_k|^2.
double rayleigh_quotient(const FourierTable& table,
                         const std::vector<std::complex<double>>& coeffs,
                         std::int64_t k_lo, double r, double R_scale);

struct RadiusSelection {
  double r_star = 0.0;
  Extremizer extremizer;
};

/// Max Rayleigh quotient of g_r over a uniform grid in (R - R^{1/3}, R + R^{1/3}).
RadiusSelection select_radius(const FourierTable& table, double R,
                              const BandFamily& family, int grid = 9);

struct KnappWitness {
  double R = 0.0;
  double arc_center = 0.0;
  double arc_length = 0.0;      // exact ||g||_2^2 of the indicator
  std::int64_t modulation = 0;  // tangency frequency n0 ~ R
  std::int64_t k_lo = 0;
  std::vector<std::complex<double>> coeffs;
  double norm_sq = 0.0;  // truncated sum |a_k|^2
  double rayleigh = 0.0;
};

/// Modulated arc indicator of parameter length R^{-1/3}, centered on the
/// densest support window, Dirichlet-kernel coefficients, evaluated at r = R.
KnappWitness knapp_g(const SelfSimilarMeasure& mu, const FourierTable& table,
                     double R);

}  // namespace circext
