#include "circext/extremizer.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

#include "circext/bessel.hpp"
#include "circext/bounds.hpp"

namespace circext {

BandFamily band_family(double R_in, int p_min) {
  if (R_in < 1024.0) throw std::invalid_argument("band_family: need R >= 2^10");
  if (p_min < 2) throw std::invalid_argument("band_family: need p_min >= 2");
  std::int64_t R = static_cast<std::int64_t>(std::llround(R_in));
  double r13 = std::cbrt(static_cast<double>(R));
  double limit = std::pow(static_cast<double>(R), 2.0 / 3.0) *
                 (1.0 + 1e-9) / std::ldexp(1.0, 2 * kLpK);
  BandFamily fam;
  fam.R = R;
  for (int p = p_min; std::ldexp(1.0, 2 * p) <= limit; ++p) {
    double lo_edge = std::ldexp(1.0, 2 * p) * r13;        // 4^p R^{1/3}
    double hi_edge = std::ldexp(1.0, 2 * (p + 1)) * r13;  // 4^{p+1} R^{1/3}
    Band b;
    b.p = p;
    b.k_hi = static_cast<std::int64_t>(std::floor(R - lo_edge));
    b.k_lo = static_cast<std::int64_t>(std::floor(R - hi_edge)) + 1;
    if (b.k_lo < 1 || b.k_hi < b.k_lo) break;
    fam.members.push_back(b);
  }
  if (fam.members.empty())
    throw std::length_error("band_family: no admissible band at this R");
  return fam;
}

Extremizer build_g(const FourierTable& table, const BandFamily& family,
                   double r, const std::vector<double>& window_averages) {
  const std::int64_t R = family.R;
  const double r13 = std::cbrt(static_cast<double>(R));
  Extremizer g;
  g.R = R;
  g.r = r;
  g.k_lo = family.k_min();
  std::int64_t k_hi = family.k_max();
  g.coeffs.assign(k_hi - g.k_lo + 1, {0.0, 0.0});

  BesselVector bv = bessel_vector(r, static_cast<int>(k_hi));
  for (const Band& b : family.members) {
    double inv2p = std::ldexp(1.0, -b.p);
    double floor_a = 1e-3 * std::pow(2.0, -0.5 * b.p) / r13;
    bool degenerate = false;
    for (std::int64_t k = b.k_lo; k <= b.k_hi; ++k) {
      if (window_averages[k] < floor_a) {
        degenerate = true;
        break;
      }
    }
    if (degenerate) {
      std::fprintf(stderr,
                   "warning: band p=%d excluded (window average below the "
                   "admissibility floor)\n",
                   b.p);
      continue;
    }
    ++g.bands_used;
    for (std::int64_t k = b.k_lo; k <= b.k_hi; ++k) {
      std::int64_t n = k - R;
      double bracket = lp_bracket(static_cast<double>(n), b.p, kLpK,
                                  static_cast<double>(R));
      std::complex<double> delta_hat = table.value(n) * bracket;
      double sgn = bv.values[k] < 0.0 ? -1.0 : 1.0;  // sgn 0 := +1
      g.coeffs[k - g.k_lo] = delta_hat * sgn * inv2p / window_averages[k];
    }
  }
  double nsq = 0.0;
  for (const auto& c : g.coeffs) nsq += std::norm(c);
  g.norm_sq = nsq;
  return g;
}

double rayleigh_quotient(const FourierTable& table,
                         const std::vector<std::complex<double>>& coeffs,
                         std::int64_t k_lo, double r, double R_scale) {
  double nsq = 0.0;
  for (const auto& c : coeffs) nsq += std::norm(c);
  if (nsq == 0.0) return 0.0;
  std::int64_t k_hi = k_lo + static_cast<std::int64_t>(coeffs.size()) - 1;
  std::int64_t k_abs = std::max(std::llabs(k_lo), std::llabs(k_hi));
  BesselVector bv = bessel_vector(r, static_cast<int>(k_abs));
  std::vector<std::complex<double>> jc(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    std::int64_t k = k_lo + static_cast<std::int64_t>(i);
    std::int64_t a = k < 0 ? -k : k;
    double jv = bv.values[a];
    if (k < 0 && (a & 1)) jv = -jv;
    jc[i] = coeffs[i] * jv;
  }
  double q = mu_integral_square_block(table, jc, k_lo);
  return R_scale * q / nsq;
}

RadiusSelection select_radius(const FourierTable& table, double R,
                              const BandFamily& family, int grid) {
  if (grid < 1) throw std::invalid_argument("select_radius: grid >= 1");
  double r13 = std::cbrt(R);
  // A_k(R) is radius-independent: one shared vector pass for all candidates.
  std::vector<double> averages = average_abs_all(
      static_cast<int>(family.k_max()), R, 16, static_cast<int>(family.k_min()));

  RadiusSelection best;
  bool first = true;
  for (int i = 0; i < grid; ++i) {
    double r = R + r13 * ((2.0 * i + 1.0) / grid - 1.0);
    Extremizer g = build_g(table, family, r, averages);
    g.rayleigh = rayleigh_quotient(table, g.coeffs, g.k_lo, r, R);
    if (first || g.rayleigh > best.extremizer.rayleigh) {
      best.r_star = r;
      best.extremizer = std::move(g);
      first = false;
    }
  }
  return best;
}

KnappWitness knapp_g(const SelfSimilarMeasure& mu, const FourierTable& table,
                     double R) {
  if (R < 1024.0) throw std::invalid_argument("knapp_g: need R >= 2^10");
  KnappWitness w;
  w.R = R;
  w.arc_length = std::pow(R, -1.0 / 3.0);
  w.arc_center = best_arc_center(mu, w.arc_length);
  w.modulation = static_cast<std::int64_t>(std::llround(R));

  std::int64_t spread = static_cast<std::int64_t>(std::ceil(40.0 * std::cbrt(R)));
  w.k_lo = w.modulation - spread;
  w.coeffs.assign(2 * spread + 1, {0.0, 0.0});
  const double two_pi = 2.0 * std::numbers::pi;
  double nsq = 0.0;
  for (std::int64_t k = w.k_lo; k <= w.modulation + spread; ++k) {
    double m = static_cast<double>(k - w.modulation);
    double x = m * w.arc_length;
    double sinc = (x == 0.0) ? 1.0
                             : std::sin(std::numbers::pi * x) /
                                   (std::numbers::pi * x);
    double ang = -two_pi * m * w.arc_center;
    std::complex<double> a =
        w.arc_length * sinc *
        std::complex<double>(std::cos(ang), std::sin(ang));
    w.coeffs[k - w.k_lo] = a;
    nsq += std::norm(a);
  }
  w.norm_sq = nsq;
  w.rayleigh = rayleigh_quotient(table, w.coeffs, w.k_lo, R, R);
  return w;
}

}  // namespace circext
