#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "circext/fft.hpp"
#include "circext/measure.hpp"

namespace circext {

using Coefficients = std::map<std::int64_t, std::complex<double>>;

/// The Hermitian form G_{jk} = J_{|j|}(r) mu^(j-k) J_{|k|}(r) on the band
/// j,k in [-K, K], applied matrix-free as diagonal * Toeplitz * diagonal.
/// Negative Bessel orders use |k|: the sign (-1)^k is a diagonal +-1
/// conjugation that moves no eigenvalue and no Rayleigh quotient.
class QuadraticForm {
 public:
  QuadraticForm(const FourierTable& table, double r, int K);

  double radius() const { return r_; }
  int band() const { return K_; }
  std::size_t dim() const { return 2 * static_cast<std::size_t>(K_) + 1; }

  /// y = G x; x, y indexed by k + K, length dim().
  void apply(const std::complex<double>* x, std::complex<double>* y) const;
  std::vector<std::complex<double>> apply(
      const std::vector<std::complex<double>>& x) const;

  /// Entry G_{jk}, j,k in [-K, K] (scalar path, for tests and spot checks).
  std::complex<double> entry(std::int64_t j, std::int64_t k) const;

  double diag(std::int64_t k) const;        // J_{|k|}(r)
  bool toeplitz_is_delta() const { return delta_symbol_; }

 private:
  double r_;
  int K_;
  int K_eff_;  // diagonal support: J_{|k|}(r) negligible beyond it
  std::vector<double> diag_;  // index k + K_eff, |k| <= K_eff
  std::unique_ptr<ToeplitzOperator> toeplitz_;
  mutable std::vector<std::complex<double>> work_;
  bool delta_symbol_ = false;
  const FourierTable* table_;
};

struct LanczosResult {
  double lambda = 0.0;
  double residual = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// Largest eigenvalue of G by Lanczos on the real symmetric reduction with
/// full reorthogonalization (thick restart past the basis cap); start vector
/// seeded deterministically (seed 0x5EED).
LanczosResult lambda_max(const QuadraticForm& form, double tol = 1e-8,
                         int max_iter = 400);

struct EnergyResult {
  double R = 0.0;
  double r_star = 0.0;
  double lambda_max = 0.0;
  double energy = 0.0;  // R * lambda_max
  int lanczos_iterations = 0;
  double residual = 0.0;
};

/// Default band for radius r: turning-point width plus slack.
int default_band(double r);

/// E(mu, R) as max over radius_grid points of the window
/// (R - R^{1/3}, R + R^{1/3}) of R * lambda_max(G(r)).  threads > 1
/// evaluates window points in parallel.
EnergyResult energy(const FourierTable& table, double R, int radius_grid = 9,
                    double tol = 1e-8, int threads = 1);

/// Model series  sum_k a_k J_k(r) e^{2 pi i k theta}  with J_{-k} = (-1)^k J_k.
std::complex<double> extension_series(const Coefficients& g, double r,
                                      double theta);

struct QuadratureCheck {
  std::complex<double> model;      // series at argument r
  std::complex<double> physical;   // trapezoid quadrature of the integral
  double unitary_match;            // rel. error after the r -> 2 pi r map
};

/// Physical extension integral vs the model series: the two agree after
/// substituting r -> 2 pi r and the diagonal phase (-i)^k (Jacobi-Anger).
QuadratureCheck extension_quadrature_check(const Coefficients& g, double r,
                                           double theta, int quad_points);

/// integral of |sum c_k e^{2 pi i k theta}|^2 dmu = sum_{j,k} c_j conj(c_k) mu^(k-j).
double mu_integral_square(const FourierTable& table, const Coefficients& g);

/// Same, for a contiguous coefficient block starting at frequency k0.
double mu_integral_square_block(const FourierTable& table,
                                const std::vector<std::complex<double>>& c,
                                std::int64_t k0);

}  // namespace circext
