#pragma once

#include <vector>

namespace circext {

/// J_0(r)..J_K(r) for one argument, from a single normalized backward
/// (Miller) recurrence pass.
struct BesselVector {
  double argument = 0.0;
  int max_order = 0;
  double accuracy = 0.0;
  std::vector<double> values;  // values[k] = J_k(r)

  double operator[](int k) const { return values[k]; }
};

/// All orders 0..K at argument r; absolute error <= accuracy on every entry.
/// Throws std::domain_error for r < 0, std::length_error past the start cap.
BesselVector bessel_vector(double r, int K, double accuracy = 1e-13);

/// Single J_k(r): long-double power series for small r, otherwise one
/// recurrence pass.  Convenience wrapper, same accuracy contract.
double bessel_j(int k, double r);

/// The phase f_k(r) = sqrt(r^2-k^2) - k*arccos(k/r) and its derivative
/// f'_k(r) = sqrt(r^2-k^2)/r, defined for r >= k > 0.
struct PhaseData {
  double order;
  double argument;
  double f;
  double f_prime;
};
PhaseData phase(double k, double r);  // throws std::domain_error if r < k

/// Airy pair on the negative axis: returns {Ai(-t), Bi(-t)} for t >= 0,
/// via J_{+-1/3} at z = (2/3) t^{3/2}; absolute error <= 1e-8 on [0, 1e6].
struct AiryPair {
  double ai_neg;
  double bi_neg;
};
AiryPair airy_pair(double t);  // throws std::domain_error for t < 0

/// Leading uniform-asymptotic term near the turning point:
///   ((lambda/2) k^{2/3} phi'(lambda))^{-1/2} * Ai(-k^{2/3} phi(lambda)),
/// lambda = r/k in [1, 3/2]; phi recovered from the phase, with a Taylor
/// branch at lambda = 1.
double uniform_leading_term(int k, double r);

/// Turning-point transition function phi(lambda) and phi'(lambda), lambda >= 1.
double phi_of_lambda(double lambda);
double phi_prime_of_lambda(double lambda);

/// A_k(R) = R^{-1/3} * integral of |J_k| over (R - R^{1/3}, R + R^{1/3}),
/// trapezoid with at least max(16, grid_per_wavelength) points per local
/// oscillation wavelength.
double average_abs(int k, double R, int grid_per_wavelength = 16);

/// A_k(R) for every k in [0, k_max] at once, sharing one BesselVector pass
/// per quadrature node.  step_hint <= 0 picks the step for the finest
/// requested band (k down to k_min_hint).
std::vector<double> average_abs_all(int k_max, double R,
                                    int grid_per_wavelength = 16,
                                    int k_min_hint = -1);

/// Test envelope R^{-1/2} * min{max(k,1)^{1/6}, ((R+k)/|R-k|)^{1/4}}.
double uniform_envelope(int k, double R);

}  // namespace circext
