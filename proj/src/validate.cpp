#include "circext/validate.hpp"

#include <chrono>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

#include "circext/bessel.hpp"
#include "circext/bounds.hpp"
#include "circext/extremizer.hpp"
#include "circext/measure.hpp"
#include "circext/operator.hpp"

namespace circext {

namespace {

struct Check {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (ok && !cond) {
      ok = false;
      detail = what;
    }
  }
};

std::string describe(double got, double bound) {
  std::ostringstream os;
  os << "got " << got << " vs bound " << bound;
  return os.str();
}

Check suite_measure(bool inject_corrupt) {
  Check c;
  auto mu = quarter_cantor();
  FourierTable table(mu, 256);
  if (inject_corrupt) table.corrupt_for_test(3, {0.25, 0.125});

  // mu^ symmetry (fourier-symmetry): exact after conjugation, and mu^(0)=1.
  c.require(table.value(0) == std::complex<double>(1.0, 0.0), "fourier-symmetry: mu^(0) != 1");
  for (int n = 1; n <= 256; ++n) {
    auto direct = mu.fourier_coefficient(n);
    auto cached = table.value(n);
    c.require(table.value(-n) == std::conj(cached), "fourier-symmetry: conj mismatch");
    c.require(std::abs(cached) <= 1.0 + 1e-12, "fourier-symmetry: |mu^| > 1");
    c.require(std::abs(direct - cached) < 1e-15, "fourier-symmetry: cache != pointwise");
    if (!c.ok) return c;
  }

  // Functional equation: mu^(xi) = (1/m) sum_d e^{-2 pi i xi b_d} * mu^(rho xi).
  for (double xi : {1.0, 3.7, 17.0, 255.0}) {
    std::complex<double> factor{0.0, 0.0};
    for (double b : mu.digits()) {
      double ang = -2.0 * std::numbers::pi * xi * b;
      factor += std::complex<double>(std::cos(ang), std::sin(ang));
    }
    factor /= mu.branch_count();
    auto lhs = mu.fourier_coefficient(xi, 1e-12);
    auto rhs = factor * mu.fourier_coefficient(mu.ratio() * xi, 1e-12);
    c.require(std::abs(lhs - rhs) <= 1e-10,
              "functional-equation: residual " + describe(std::abs(lhs - rhs), 1e-10));
  }

  // Atom-oracle Lipschitz transfer: |mu^(xi) - atom sum| <= 2 pi |xi| rho^g.
  for (int g : {6, 10}) {
    auto ap = mu.atoms(g);
    for (double xi : {1.0, 8.0, 33.0}) {
      std::complex<double> s{0.0, 0.0};
      for (const auto& a : ap.atoms) {
        double ang = -2.0 * std::numbers::pi * xi * a.position;
        s += a.mass * std::complex<double>(std::cos(ang), std::sin(ang));
      }
      double bound = 2.0 * std::numbers::pi * xi * std::pow(mu.ratio(), g);
      double err = std::abs(mu.fourier_coefficient(xi, 1e-12) - s);
      c.require(err <= bound, "atom-oracle: " + describe(err, bound));
    }
  }

  // Delta_p telescoping: sum_p bracket(p) = (sum of K inner tails) - (K outer heads).
  double R = 4096.0;
  for (double n : {9.0, 40.0, 150.0, 1024.0, 5000.0}) {
    int P = 6;
    double lhs = 0.0;
    for (int p = 0; p <= P; ++p) lhs += lp_bracket(n, p, kLpK, R);
    double rhs = 0.0;
    double edge = std::cbrt(R);
    for (int q = P + 1; q <= P + kLpK; ++q) rhs += plateau_bump(std::ldexp(n, -2 * q), edge);
    for (int p = 0; p < kLpK; ++p) rhs -= plateau_bump(std::ldexp(n, -2 * p), edge);
    c.require(std::fabs(lhs - rhs) <= 1e-12, "telescoping: " + describe(lhs - rhs, 1e-12));
  }
  return c;
}

Check suite_bessel() {
  Check c;
  for (double r : {10.0, 100.0, 1000.0, 10000.0}) {
    int K = static_cast<int>(std::ceil(1.3 * r)) + 200;
    BesselVector bv = bessel_vector(r, K);
    double norm = bv.values[0] * bv.values[0];
    for (int k = 1; k <= K; ++k) norm += 2.0 * bv.values[k] * bv.values[k];
    c.require(std::fabs(norm - 1.0) <= 1e-8,
              "normalization: " + describe(norm - 1.0, 1e-8));
    for (int k = 1; k < K; k += std::max(1, K / 97)) {
      double res = bv.values[k - 1] + bv.values[k + 1] -
                   (2.0 * k / r) * bv.values[k];
      c.require(std::fabs(res) <= 1e-8 * std::max(1.0, std::fabs(bv.values[k])),
                "recurrence: " + describe(res, 1e-8));
    }
    // Envelope with margin 3 on a coarse order scan.
    for (int k = 0; k <= K; k += std::max(1, K / 61)) {
      c.require(std::fabs(bv.values[k]) <= 3.0 * uniform_envelope(k, r),
                "envelope exceeded at k=" + std::to_string(k));
    }
    if (!c.ok) return c;
  }
  // Phase derivative vs central difference.
  for (double k : {10.0, 300.0}) {
    for (double r : {k + 5.0, 2.0 * k}) {
      double h = 1e-6 * r;
      double num = (phase(k, r + h).f - phase(k, r - h).f) / (2.0 * h);
      c.require(std::fabs(num - phase(k, r).f_prime) <= 1e-6,
                "phase-derivative: " + describe(num - phase(k, r).f_prime, 1e-6));
    }
  }
  // Airy boundedness on the negative axis.
  for (double t = 0.0; t <= 100.0; t += 0.37) {
    AiryPair ap = airy_pair(t);
    c.require(std::fabs(ap.ai_neg) <= 1.0 && std::fabs(ap.bi_neg) <= 1.0,
              "airy-bound exceeded at t=" + std::to_string(t));
  }
  return c;
}

Check suite_operator() {
  Check c;
  auto mu = quarter_cantor();
  double r = 120.0;
  int K = 128;
  FourierTable table(mu, 2 * K);
  QuadraticForm form(table, r, K);
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  std::size_t n = form.dim();
  for (int trial = 0; trial < 4; ++trial) {
    std::vector<std::complex<double>> x(n), y(n);
    for (auto& z : x) z = {uni(rng), uni(rng)};
    for (auto& z : y) z = {uni(rng), uni(rng)};
    auto gx = form.apply(x);
    auto gy = form.apply(y);
    std::complex<double> a{0, 0}, b{0, 0}, qf{0, 0};
    double nx = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      a += std::conj(y[i]) * gx[i];
      b += std::conj(gy[i]) * x[i];
      qf += std::conj(x[i]) * gx[i];
      nx += std::norm(x[i]);
    }
    c.require(std::abs(a - b) <= 1e-10 * std::max(1.0, std::abs(a)),
              "hermitian: " + describe(std::abs(a - b), 1e-10));
    c.require(qf.real() >= -1e-10 * nx, "psd: negative Rayleigh quotient");
    // Dense apply oracle.
    std::vector<std::complex<double>> dense(n, {0.0, 0.0});
    for (std::size_t i = 0; i < n; ++i) {
      std::int64_t ki = static_cast<std::int64_t>(i) - K;
      for (std::size_t j = 0; j < n; ++j) {
        std::int64_t kj = static_cast<std::int64_t>(j) - K;
        dense[i] += form.entry(ki, kj) * x[j];
      }
    }
    double err = 0.0, scale = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      err = std::max(err, std::abs(dense[i] - gx[i]));
      scale = std::max(scale, std::abs(dense[i]));
    }
    c.require(err <= 1e-10 * std::max(1.0, scale),
              "matrix-free vs dense: " + describe(err, 1e-10));
    if (!c.ok) return c;
  }
  // Lebesgue: diagonal form, lambda = max J_k(r)^2.
  auto leb = lebesgue_measure();
  FourierTable ltab(leb, 2 * default_band(r));
  QuadraticForm lform(ltab, r, default_band(r));
  auto lr = lambda_max(lform);
  BesselVector bv = bessel_vector(r, default_band(r));
  double jmax = 0.0;
  for (double v : bv.values) jmax = std::max(jmax, v * v);
  c.require(std::fabs(lr.lambda - jmax) <= 1e-10 * jmax,
            "diagonal case: " + describe(lr.lambda - jmax, 1e-10 * jmax));
  return c;
}

Check suite_bounds() {
  Check c;
  c.require(std::fabs(predicted_m_r(0.5, 4096.0) - 64.0) < 1e-9,
            "predicted: s=1/2 branch");
  c.require(std::fabs(predicted_m_r(1.0, 4096.0) - 16.0) < 1e-9,
            "predicted: s=1 branch");
  auto mu = quarter_cantor();
  double prev = 0.0;
  for (double R : {1024.0, 4096.0, 16384.0}) {
    MRResult res = m_r(mu, R);
    c.require(res.value > 0.0 && res.alpha_star >= 1.0 / R - 1e-15 &&
                  res.alpha_star <= std::pow(R, -2.0 / 3.0) + 1e-15,
              "m_r: alpha_star outside scale interval");
    c.require(res.value >= prev * 0.99, "m_r: monotonicity violated");
    prev = res.value;
  }
  MRResult coarse = m_r(mu, 4096.0, 4), fine = m_r(mu, 4096.0, 8);
  c.require(std::fabs(fine.value - coarse.value) <= 0.05 * coarse.value,
            "m_r: grid refinement moved the value by > 5%");
  return c;
}

Check suite_extremizer() {
  Check c;
  double R = 4096.0;
  BandFamily fam = band_family(R);
  int lower = static_cast<int>(std::floor(std::log2(std::pow(R, 2.0 / 3.0)) / 2.0)) -
              kPMin - kLpK;
  c.require(static_cast<int>(fam.members.size()) >= std::max(1, lower),
            "band count below the formula floor");
  for (std::size_t i = 0; i + 1 < fam.members.size(); ++i)
    c.require(fam.members[i].k_lo > fam.members[i + 1].k_hi,
              "bands not disjoint");
  // Lebesgue: all extremizer coefficients vanish.
  auto leb = lebesgue_measure();
  FourierTable ltab(leb, static_cast<int>(fam.k_max() - fam.k_min()) + 8);
  auto averages = average_abs_all(static_cast<int>(fam.k_max()), R, 16,
                                  static_cast<int>(fam.k_min()));
  Extremizer g = build_g(ltab, fam, R, averages);
  c.require(g.norm_sq == 0.0, "lebesgue coefficients must vanish");
  // Dominance at small R for the quarter-Cantor measure.
  auto mu = quarter_cantor();
  FourierTable table(mu, 2 * default_band(R + std::cbrt(R)));
  RadiusSelection sel = select_radius(table, R, fam, 3);
  EnergyResult er = energy(table, R, 3);
  c.require(sel.extremizer.rayleigh <= er.energy * (1.0 + 1e-6),
            "variational dominance failed");
  return c;
}

}  // namespace

std::vector<SuiteResult> run_validation(const ValidateOptions& opts) {
  std::vector<std::pair<std::string, std::function<Check()>>> all = {
      {"measure", [&] { return suite_measure(opts.inject_corrupt_table); }},
      {"bessel", [] { return suite_bessel(); }},
      {"operator", [] { return suite_operator(); }},
      {"bounds", [] { return suite_bounds(); }},
      {"extremizer", [] { return suite_extremizer(); }},
  };
  std::vector<SuiteResult> results;
  for (auto& [name, fn] : all) {
    if (!opts.suites.empty()) {
      bool wanted = false;
      for (const auto& s : opts.suites) wanted |= (s == name);
      if (!wanted) continue;
    }
    auto t0 = std::chrono::steady_clock::now();
    Check c = fn();
    auto t1 = std::chrono::steady_clock::now();
    SuiteResult r;
    r.name = name;
    r.passed = c.ok;
    r.seconds = std::chrono::duration<double>(t1 - t0).count();
    r.detail = c.ok ? "ok" : c.detail;
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace circext
