#include <cmath>
#include <numbers>
#include <stdexcept>

#include "circext/bessel.hpp"

namespace circext {

namespace {

using quad = __float128;

// gamma(2/3), gamma(4/3) as hi+lo double pairs (sub-1e-32 relative error).
const quad kGamma23 = quad(1.3541179394264005) + quad(-4.6231203911366416e-17);
const quad kGamma43 = quad(0.8929795115692493) + quad(-5.1196306968431507e-17);

constexpr double kAi0 = 0.3550280538878172;    // Ai(0)
constexpr double kAip0 = 0.2588194037928068;   // -Ai'(0)

quad quad_abs(quad x) { return x < 0 ? -x : x; }

// w^{1/3} for w > 0: double cbrt refined by one Newton step in quad.
quad quad_cbrt(quad w) {
  quad y = quad(std::cbrt(static_cast<double>(w)));
  y = (2.0 * y + w / (y * y)) / 3.0;
  return y;
}

// J_{alpha}(z) for alpha = +-1/3 by power series in quad precision.
// Largest term at z = 40 is ~2e15, so the quad rounditoff stays below 1e-18.
quad series_j_third(int sign, quad z) {
  quad halfz = z / 2.0;
  quad c = quad_cbrt(halfz);  // (z/2)^{1/3}
  quad alpha, first;
  if (sign > 0) {
    alpha = quad(1.0) / 3.0;
    first = c / kGamma43;  // (z/2)^{1/3}/Gamma(4/3)
  } else {
    alpha = quad(-1.0) / 3.0;
    first = 1.0 / (c * kGamma23);  // (z/2)^{-1/3}/Gamma(2/3)
  }
  quad term = first;
  quad sum = term;
  quad q = halfz * halfz;
  for (int m = 1; m < 300; ++m) {
    term *= -q / (quad(m) * (quad(m) + alpha));
    sum += term;
    if (quad_abs(term) < 1e-30 * (quad_abs(sum) + quad(1e-30))) break;
  }
  return sum;
}

// Hankel asymptotic with two corrections in each of P and Q; |alpha| = 1/3.
// Next omitted term is below 3e-9 in absolute value for z >= 40.
double asymptotic_j_third(int sign, double z) {
  double alpha = sign / 3.0;
  double mu = 4.0 * alpha * alpha;
  double iz = 1.0 / (8.0 * z);
  double c1 = (mu - 1.0);
  double c2 = (mu - 1.0) * (mu - 9.0) / 2.0;
  double c3 = (mu - 1.0) * (mu - 9.0) * (mu - 25.0) / 6.0;
  double P = 1.0 - c2 * iz * iz;
  double Q = c1 * iz - c3 * iz * iz * iz;
  double omega = z - alpha * std::numbers::pi / 2.0 - std::numbers::pi / 4.0;
  return std::sqrt(2.0 / (std::numbers::pi * z)) *
         (P * std::cos(omega) - Q * std::sin(omega));
}

// Maclaurin branch around the origin (exact limit at t = 0).
AiryPair airy_maclaurin(double x) {
  double f = 1.0, u = 1.0;
  double g = x, v = x;
  double x3 = x * x * x;
  for (int k = 1; k < 40; ++k) {
    u *= x3 / (3.0 * k * (3.0 * k - 1.0));
    v *= x3 / (3.0 * k * (3.0 * k + 1.0));
    f += u;
    g += v;
    if (std::fabs(u) + std::fabs(v) < 1e-18) break;
  }
  AiryPair out;
  out.ai_neg = kAi0 * f - kAip0 * g;
  out.bi_neg = std::sqrt(3.0) * (kAi0 * f + kAip0 * g);
  return out;
}

}  // namespace

AiryPair airy_pair(double t) {
  if (t < 0.0) throw std::domain_error("airy_pair: need t >= 0");
  if (t <= 1.0) return airy_maclaurin(-t);
  double z = (2.0 / 3.0) * t * std::sqrt(t);
  double sqrt_t = std::sqrt(t);
  double jp, jm;
  if (z <= 40.0) {
    jp = static_cast<double>(series_j_third(+1, quad(z)));
    jm = static_cast<double>(series_j_third(-1, quad(z)));
  } else {
    jp = asymptotic_j_third(+1, z);
    jm = asymptotic_j_third(-1, z);
  }
  AiryPair out;
  out.ai_neg = (sqrt_t / 3.0) * (jp + jm);
  out.bi_neg = std::sqrt(t / 3.0) * (jm - jp);
  return out;
}

}  // namespace circext
