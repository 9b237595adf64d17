#include <cmath>
#include <numbers>
#include <stdexcept>

#include "circext/bessel.hpp"
#include "circext/operator.hpp"

namespace circext {

namespace {

// J at signed order with J_{-k} = (-1)^k J_k, sharing one vector pass.
double signed_j(const BesselVector& bv, std::int64_t k) {
  std::int64_t a = k < 0 ? -k : k;
  double v = bv.values[static_cast<std::size_t>(a)];
  return (k < 0 && (a & 1)) ? -v : v;
}

}  // namespace

std::complex<double> extension_series(const Coefficients& g, double r,
                                      double theta) {
  if (g.empty()) return {0.0, 0.0};
  std::int64_t k_abs = 0;
  for (const auto& [k, a] : g) k_abs = std::max(k_abs, k < 0 ? -k : k);
  BesselVector bv = bessel_vector(r, static_cast<int>(k_abs));
  std::complex<double> sum{0.0, 0.0};
  const double two_pi = 2.0 * std::numbers::pi;
  for (const auto& [k, a] : g) {
    double ang = two_pi * static_cast<double>(k) * theta;
    sum += a * signed_j(bv, k) * std::complex<double>(std::cos(ang), std::sin(ang));
  }
  return sum;
}

QuadratureCheck extension_quadrature_check(const Coefficients& g, double r,
                                           double theta, int quad_points) {
  std::int64_t k_abs = 0;
  for (const auto& [k, a] : g) k_abs = std::max(k_abs, k < 0 ? -k : k);
  double needed = 8.0 * (r + static_cast<double>(k_abs));
  if (quad_points < needed || (quad_points & (quad_points - 1)) != 0)
    throw std::invalid_argument(
        "extension_quadrature_check: quad_points must be a power of two >= "
        "8*(r + max|k|), got too few for the requested frequencies");

  const double two_pi = 2.0 * std::numbers::pi;
  // Physical integral over the unit-parameter circle:
  //   int_0^1 exp(-2 pi i r cos(2 pi (phi - theta))) g(phi) dphi.
  std::complex<double> physical{0.0, 0.0};
  for (int q = 0; q < quad_points; ++q) {
    double phi = static_cast<double>(q) / quad_points;
    std::complex<double> gval{0.0, 0.0};
    for (const auto& [k, a] : g) {
      double ang = two_pi * static_cast<double>(k) * phi;
      gval += a * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    double kernel_phase = -two_pi * r * std::cos(two_pi * (phi - theta));
    physical += gval * std::complex<double>(std::cos(kernel_phase),
                                            std::sin(kernel_phase));
  }
  physical /= static_cast<double>(quad_points);

  QuadratureCheck out;
  out.model = extension_series(g, r, theta);

  // Jacobi-Anger: physical = sum (-i)^k a_k J_k(2 pi r) e^{2 pi i k theta}.
  Coefficients corrected;
  const std::complex<double> mi(0.0, -1.0);
  for (const auto& [k, a] : g) {
    std::complex<double> ph{1.0, 0.0};
    int e = static_cast<int>(((k % 4) + 4) % 4);
    for (int i = 0; i < e; ++i) ph *= mi;
    corrected[k] = a * ph;
  }
  std::complex<double> model_corrected =
      extension_series(corrected, two_pi * r, theta);

  out.physical = physical;
  double denom = std::max({std::abs(physical), std::abs(model_corrected), 1e-30});
  out.unitary_match = std::abs(physical - model_corrected) / denom;
  return out;
}

double mu_integral_square(const FourierTable& table, const Coefficients& g) {
  if (g.empty()) return 0.0;
  std::int64_t k_lo = g.begin()->first;
  std::int64_t k_hi = g.rbegin()->first;
  std::vector<std::complex<double>> block(k_hi - k_lo + 1, {0.0, 0.0});
  for (const auto& [k, a] : g) block[k - k_lo] = a;
  return mu_integral_square_block(table, block, k_lo);
}

double mu_integral_square_block(const FourierTable& table,
                                const std::vector<std::complex<double>>& c,
                                std::int64_t k0) {
  (void)k0;  // the value is translation invariant; k0 kept for the interface
  std::size_t n = c.size();
  if (n == 0) return 0.0;
  if (!table.covers(static_cast<std::int64_t>(n) - 1))
    throw std::out_of_range("mu_integral_square: table does not cover spread");
  // sum_{j,k} c_j conj(c_k) mu^(k-j) = <c, T c> with T_{kj} = mu^(k-j).
  double acc;
  if (n <= 64) {
    std::complex<double> s{0.0, 0.0};
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        s += c[j] * std::conj(c[k]) *
             table.value(static_cast<std::int64_t>(k) - static_cast<std::int64_t>(j));
    acc = s.real();
  } else {
    // y_k = sum_j mu^(k-j) c_j, i.e. symbol(row - col) = mu^(row - col).
    ToeplitzOperator top(n, [&table](std::int64_t d) { return table.value(d); });
    std::vector<std::complex<double>> tc(n);
    top.apply(c.data(), tc.data());
    std::complex<double> s{0.0, 0.0};
    for (std::size_t k = 0; k < n; ++k) s += std::conj(c[k]) * tc[k];
    acc = s.real();
  }
  return acc;
}

}  // namespace circext
