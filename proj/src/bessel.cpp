#include "circext/bessel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace circext {

namespace {

constexpr double kRescaleLimit = 1e250;
constexpr double kRescaleFactor = 1e-250;

// Long-double power series; safe (no destructive cancellation) for r <= 12.
long double series_jk(int k, long double r) {
  long double half = r / 2.0L;
  long double term = 1.0L;
  for (int i = 1; i <= k; ++i) term *= half / i;
  long double sum = term;
  long double q = half * half;
  for (int m = 1; m < 400; ++m) {
    term *= -q / (static_cast<long double>(m) * (k + m));
    sum += term;
    if (std::fabs(term) < 1e-25L * (std::fabs(sum) + 1e-30L)) break;
  }
  return sum;
}

int start_pad(double r, double accuracy) {
  (void)accuracy;
  return std::max(50, static_cast<int>(std::ceil(10.0 * std::cbrt(r))));
}

// One Miller pass: downward three-term recurrence from a zero/one seed,
// normalized by J_0 + 2 sum_{k even} J_k = 1.  Entries 0..K are stored.
// Rescaling is tracked per entry as an epoch count so the hot loop stays
// O(1) per order even when the trial solution overflows repeatedly.
bool miller_pass(double r, int K, int start, std::vector<double>& out) {
  std::vector<int> epoch(K + 1, 0);
  int rescales = 0;
  double vkp1 = 0.0, vk = 1.0;
  double norm = (start % 2 == 0) ? 2.0 * vk : 0.0;
  for (int k = start; k >= 1; --k) {
    double vkm1 = (2.0 * k / r) * vk - vkp1;
    vkp1 = vk;
    vk = vkm1;
    if (k - 1 <= K) {
      out[k - 1] = vk;
      epoch[k - 1] = rescales;
    }
    if ((k - 1) % 2 == 0) norm += (k - 1 == 0) ? vk : 2.0 * vk;
    if (std::fabs(vk) > kRescaleLimit) {
      vk *= kRescaleFactor;
      vkp1 *= kRescaleFactor;
      norm *= kRescaleFactor;
      ++rescales;
    }
  }
  if (!std::isfinite(norm) || norm == 0.0) return false;
  for (int j = 0; j <= K; ++j) {
    int lag = rescales - epoch[j];
    if (lag == 0)
      out[j] /= norm;
    else if (lag == 1)
      out[j] = out[j] * kRescaleFactor / norm;
    else
      out[j] = 0.0;  // below 1e-500 of the final scale
  }
  return true;
}

}  // namespace

BesselVector bessel_vector(double r, int K, double accuracy) {
  if (r < 0.0) throw std::domain_error("bessel_vector: negative argument");
  if (K < 0) throw std::invalid_argument("bessel_vector: negative max order");
  BesselVector bv;
  bv.argument = r;
  bv.max_order = K;
  bv.accuracy = accuracy;
  bv.values.assign(K + 1, 0.0);
  if (r == 0.0) {
    bv.values[0] = 1.0;
    return bv;
  }
  if (r <= 12.0) {
    for (int k = 0; k <= K; ++k) {
      bv.values[k] = static_cast<double>(series_jk(k, r));
      if (bv.values[k] == 0.0 && k > 4 && k > 3 * r) break;  // underflow tail
    }
    return bv;
  }
  int pad = start_pad(r, accuracy);
  for (int attempt = 0; attempt < 4; ++attempt) {
    int start = std::max(K, static_cast<int>(std::ceil(r))) + pad;
    if (start > (1 << 28))
      throw std::length_error("bessel_vector: recurrence start exceeds cap");
    if (miller_pass(r, K, start, bv.values)) return bv;
    pad *= 2;
  }
  throw std::runtime_error("bessel_vector: normalization failed");
}

double bessel_j(int k, double r) {
  if (k < 0) {
    double v = bessel_j(-k, r);
    return (k % 2 == 0) ? v : -v;
  }
  if (r < 0.0) throw std::domain_error("bessel_j: negative argument");
  if (r <= 12.0) return static_cast<double>(series_jk(k, r));
  BesselVector bv = bessel_vector(r, k);
  return bv.values[k];
}

PhaseData phase(double k, double r) {
  if (!(k > 0.0)) throw std::domain_error("phase: need k > 0");
  if (r < k) throw std::domain_error("phase: need r >= k");
  double root = std::sqrt((r - k) * (r + k));
  PhaseData pd;
  pd.order = k;
  pd.argument = r;
  pd.f = root - k * std::acos(k / r);
  pd.f_prime = root / r;
  return pd;
}

double phi_of_lambda(double lambda) {
  if (lambda < 1.0) throw std::domain_error("phi_of_lambda: need lambda >= 1");
  double u = lambda - 1.0;
  // phi(lambda)^{3/2} * (2/3) = f_k(k*lambda)/k, independent of k.
  if (u < 1e-3) {
    double a1 = std::cbrt(2.0);
    double a2 = -3.0 / (5.0 * std::cbrt(4.0));
    double a3 = 64.0 / (175.0 * std::cbrt(4.0));
    return u * (a1 + u * (a2 + u * a3));
  }
  double f_over_k = std::sqrt(lambda * lambda - 1.0) - std::acos(1.0 / lambda);
  return std::pow(1.5 * f_over_k, 2.0 / 3.0);
}

double phi_prime_of_lambda(double lambda) {
  if (lambda < 1.0) throw std::domain_error("phi_prime_of_lambda: need lambda >= 1");
  double u = lambda - 1.0;
  if (u < 1e-3) {
    double a1 = std::cbrt(2.0);
    double a2 = -3.0 / (5.0 * std::cbrt(4.0));
    double a3 = 64.0 / (175.0 * std::cbrt(4.0));
    return a1 + u * (2.0 * a2 + u * 3.0 * a3);
  }
  // Defining ODE: phi * (phi')^2 = 1 - lambda^{-2}.
  return std::sqrt((1.0 - 1.0 / (lambda * lambda)) / phi_of_lambda(lambda));
}

double uniform_leading_term(int k, double r) {
  double lambda = r / static_cast<double>(k);
  if (lambda < 1.0 || lambda > 1.5)
    throw std::domain_error("uniform_leading_term: lambda outside [1, 3/2]");
  double kk = static_cast<double>(k);
  double k23 = std::cbrt(kk * kk);
  double amp = 1.0 / std::sqrt(0.5 * lambda * k23 * phi_prime_of_lambda(lambda));
  return amp * airy_pair(k23 * phi_of_lambda(lambda)).ai_neg;
}

namespace {

double ak_step(int k, double R, int grid_per_wavelength) {
  double r13 = std::cbrt(R);
  double band = std::max(1.0, (R - static_cast<double>(k)) / r13);  // ~4^p
  double wavelength = r13 / std::sqrt(band);                        // ~R^{1/3} 2^{-p}
  return std::min(0.25, wavelength / std::max(16, grid_per_wavelength));
}

}  // namespace

double average_abs(int k, double R, int grid_per_wavelength) {
  if (k < 0 || R < 100.0)
    throw std::domain_error("average_abs: need k >= 0 and R >= 100");
  double r13 = std::cbrt(R);
  double lo = R - r13, hi = R + r13;
  double step = ak_step(k, R, grid_per_wavelength);
  int n = std::max(8, static_cast<int>(std::ceil((hi - lo) / step)));
  double h = (hi - lo) / n;
  double sum = 0.0;
  for (int i = 0; i <= n; ++i) {
    double r = lo + h * i;
    double w = (i == 0 || i == n) ? 0.5 : 1.0;
    sum += w * std::fabs(bessel_j(k, r));
  }
  return sum * h / r13;
}

std::vector<double> average_abs_all(int k_max, double R,
                                    int grid_per_wavelength, int k_min_hint) {
  if (k_max < 0 || R < 100.0)
    throw std::domain_error("average_abs_all: need k_max >= 0 and R >= 100");
  double r13 = std::cbrt(R);
  double lo = R - r13, hi = R + r13;
  int k_step_ref = (k_min_hint >= 0) ? k_min_hint : k_max;
  double step = ak_step(k_step_ref, R, grid_per_wavelength);
  int n = std::max(8, static_cast<int>(std::ceil((hi - lo) / step)));
  double h = (hi - lo) / n;
  std::vector<double> acc(k_max + 1, 0.0);
  for (int i = 0; i <= n; ++i) {
    double r = lo + h * i;
    double w = (i == 0 || i == n) ? 0.5 : 1.0;
    BesselVector bv = bessel_vector(r, k_max);
    for (int k = 0; k <= k_max; ++k) acc[k] += w * std::fabs(bv.values[k]);
  }
  for (double& a : acc) a *= h / r13;
  return acc;
}

double uniform_envelope(int k, double R) {
  double kk = std::max(1.0, static_cast<double>(k));
  double first = std::pow(kk, 1.0 / 6.0);
  double denom = std::fabs(R - static_cast<double>(k));
  double second = (denom == 0.0)
                      ? std::numeric_limits<double>::infinity()
                      : std::pow((R + static_cast<double>(k)) / denom, 0.25);
  return std::min(first, second) / std::sqrt(R);
}

}  // namespace circext
