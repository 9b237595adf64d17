#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace circext {

/// Wrap-around distance on the parameter circle [0,1).
double circle_dist(double x, double y);

struct Atom {
  double position;  // in [0,1)
  double mass;
};

/// Discrete generation-g approximation of a self-similar measure:
/// m^g atoms of mass m^{-g}, sorted by position.
struct AtomApproximation {
  int generation = 0;
  std::vector<Atom> atoms;
};

/// Equicontractive self-similar probability measure on [0,1) ~ S^1.
/// Branch d maps x -> ratio*x + digits[d], each with weight 1/m.
/// Dimension s = log(m)/log(1/ratio).
class SelfSimilarMeasure {
 public:
  // Throws std::invalid_argument on overlapping branches or m*ratio > 1.
  SelfSimilarMeasure(int branch_count, double ratio, std::vector<double> digits,
                     std::string id = "");

  int branch_count() const { return m_; }
  double ratio() const { return ratio_; }
  const std::vector<double>& digits() const { return digits_; }
  double dimension() const { return s_; }
  const std::string& id() const { return id_; }

  /// Generation-g atom list; throws std::length_error past the memory cap.
  AtomApproximation atoms(int generation, std::int64_t atom_cap = (1 << 24)) const;

  /// Mass of the closed ball B(x, r) in the wrap metric. Exact cylinder
  /// counting down to max_depth; error at most m^{-max_depth}.
  double ball_mass(double x, double r, int max_depth = 40) const;

  /// mu^(xi) = prod_j (1/m) sum_d exp(-2 pi i xi rho^{j-1} b_d), factors
  /// included while rho^j |xi| max_d b_d >= eps_tail.
  std::complex<double> fourier_coefficient(double xi, double eps_tail = 1e-8) const;

 private:
  int m_;
  double ratio_;
  std::vector<double> digits_;
  double s_;
  std::string id_;
};

/// Cached integer-frequency Fourier coefficients mu^(n), |n| <= N.
/// mu^(0) = 1 and mu^(-n) = conj(mu^(n)) by construction.
class FourierTable {
 public:
  FourierTable(const SelfSimilarMeasure& mu, int max_frequency,
               double eps_tail = 1e-8);

  int max_frequency() const { return n_max_; }
  double eps_tail() const { return eps_tail_; }

  std::complex<double> value(std::int64_t n) const;  // throws std::out_of_range
  bool covers(std::int64_t n) const { return n >= -n_max_ && n <= n_max_; }

  // Test hook: corrupt one nonnegative entry (breaks Hermitian symmetry).
  void corrupt_for_test(int n, std::complex<double> v);

 private:
  int n_max_;
  double eps_tail_;
  std::vector<std::complex<double>> nonneg_;  // nonneg_[n] = mu^(n), n >= 0
};

/// Smooth plateau cutoff used by the Littlewood-Paley pieces: 1 on
/// |xi| <= edge/2, 0 on |xi| >= edge, exp(-1/x)-smooth in between.
double plateau_bump(double xi, double edge);

/// Fourier coefficients of Delta_p(mu) = mu * (eta_{4^{-p-K}} - eta_{4^{-p}}):
/// n -> mu^(n) * [bump(4^{-p-K} n) - bump(4^{-p} n)] for every n where the
/// bracket is nonzero. Support is (R^{1/3} 4^p / 2, R^{1/3} 4^{p+K}) in |n|.
std::map<std::int64_t, std::complex<double>> lp_piece_coefficients(
    const FourierTable& table, int p, int K, double R);

/// Same bracket without the table (real frequency); used for band-local work.
double lp_bracket(double xi, int p, int K, double R);

struct RegularityConstants {
  double c_low;
  double c_high;
};

/// min/max of mu(B(x,r))/r^s over sampled support points and given scales.
RegularityConstants regularity_constants(const SelfSimilarMeasure& mu,
                                         int sample_count,
                                         const std::vector<double>& scales);

/// Canonical test measures.
SelfSimilarMeasure quarter_cantor();       // s = 1/2
SelfSimilarMeasure ninth_cantor();         // s = log2/log9
SelfSimilarMeasure middle_thirds_cantor(); // s = log2/log3
SelfSimilarMeasure lebesgue_measure();     // s = 1 (two half-branches tile [0,1))

}  // namespace circext
