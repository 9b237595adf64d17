#include "circext/measure.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace circext {

double circle_dist(double x, double y) {
  double d = std::fabs(x - y);
  d -= std::floor(d);
  return std::min(d, 1.0 - d);
}

SelfSimilarMeasure::SelfSimilarMeasure(int branch_count, double ratio,
                                       std::vector<double> digits,
                                       std::string id)
    : m_(branch_count), ratio_(ratio), digits_(std::move(digits)), id_(std::move(id)) {
  if (m_ < 1) throw std::invalid_argument("branch_count must be >= 1");
  if (!(ratio_ > 0.0 && ratio_ < 1.0))
    throw std::invalid_argument("ratio must lie in (0,1)");
  if (static_cast<int>(digits_.size()) != m_)
    throw std::invalid_argument("digit count must equal branch_count");
  if (m_ * ratio_ > 1.0 + 1e-12)
    throw std::invalid_argument("m*ratio > 1: branches cannot fit in [0,1)");
  for (double b : digits_) {
    if (b < -1e-12 || b > 1.0 - ratio_ + 1e-12)
      throw std::invalid_argument("digit outside [0, 1-rho]");
  }
  // Open set condition: branch intervals [b, b+rho] disjoint up to endpoints.
  std::vector<double> sorted = digits_;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i + 1 < m_; ++i) {
    if (sorted[i + 1] < sorted[i] + ratio_ - 1e-12) {
      std::ostringstream os;
      os << "branch intervals overlap: [" << sorted[i] << ", "
         << sorted[i] + ratio_ << "] and [" << sorted[i + 1] << ", "
         << sorted[i + 1] + ratio_ << "]";
      throw std::invalid_argument(os.str());
    }
  }
  s_ = std::log(static_cast<double>(m_)) / std::log(1.0 / ratio_);
}

AtomApproximation SelfSimilarMeasure::atoms(int generation,
                                            std::int64_t atom_cap) const {
  if (generation < 0) throw std::invalid_argument("generation must be >= 0");
  std::int64_t count = 1;
  for (int g = 0; g < generation; ++g) {
    count *= m_;
    if (count > atom_cap) throw std::length_error("atom count exceeds cap");
  }
  std::vector<double> pos{0.0};
  pos.reserve(count);
  // Image of 0 under every length-g composition of the maps.
  for (int g = 0; g < generation; ++g) {
    std::vector<double> next;
    next.reserve(pos.size() * m_);
    for (double b : digits_)
      for (double p : pos) next.push_back(ratio_ * p + b);
    pos.swap(next);
  }
  std::sort(pos.begin(), pos.end());
  AtomApproximation out;
  out.generation = generation;
  double mass = std::pow(static_cast<double>(m_), -generation);
  out.atoms.reserve(pos.size());
  for (double p : pos) out.atoms.push_back({p, mass});
  return out;
}

namespace {

// Mass of [lo, hi] (an interval on the line, lo<=hi, within [-1, 2)) against
// the cylinder [org, org+rho^depth] carrying mass m^-depth.  Straddling
// cylinders at the depth cap contribute half their mass; the bracketing
// error is at most one cylinder mass per interval endpoint.
double interval_mass_rec(const SelfSimilarMeasure& mu, double lo, double hi,
                         double org, double len, double cyl_mass, int depth) {
  double a = org, b = org + len;
  if (b <= lo || a >= hi) {
    if (b == lo || a == hi) {
      // Closed ball: endpoint touching counts the boundary point only,
      // which has measure zero for rho < 1... except the degenerate
      // single-atom case where the cylinder IS an atom.
      if (len == 0.0) return (a >= lo && a <= hi) ? cyl_mass : 0.0;
    }
    return 0.0;
  }
  if (a >= lo && b <= hi) return cyl_mass;
  if (depth == 0) return 0.5 * cyl_mass;
  double total = 0.0;
  for (double d : mu.digits())
    total += interval_mass_rec(mu, lo, hi, org + d * len, len * mu.ratio(),
                               cyl_mass / mu.branch_count(), depth - 1);
  return total;
}

double interval_mass(const SelfSimilarMeasure& mu, double lo, double hi,
                     int max_depth) {
  return interval_mass_rec(mu, lo, hi, 0.0, 1.0, 1.0, max_depth);
}

}  // namespace

double SelfSimilarMeasure::ball_mass(double x, double r, int max_depth) const {
  if (!(r > 0.0)) throw std::invalid_argument("radius must be positive");
  if (r >= 0.5) return 1.0;
  x -= std::floor(x);
  // The ball is the arc [x-r, x+r] on the circle; unfold to the line by
  // also counting the translates by +-1 (support lies in [0,1]).
  double lo = x - r, hi = x + r;
  double total = interval_mass(*this, lo, hi, max_depth) +
                 interval_mass(*this, lo + 1.0, hi + 1.0, max_depth) +
                 interval_mass(*this, lo - 1.0, hi - 1.0, max_depth);
  return std::min(total, 1.0);
}

std::complex<double> SelfSimilarMeasure::fourier_coefficient(
    double xi, double eps_tail) const {
  if (!(eps_tail > 0.0)) throw std::invalid_argument("eps_tail must be > 0");
  double b_max = 0.0;
  for (double b : digits_) b_max = std::max(b_max, std::fabs(b));
  std::complex<double> prod(1.0, 0.0);
  double scale = 1.0;  // rho^{j-1}
  const double two_pi = 2.0 * std::numbers::pi;
  // Factor j uses frequency xi*rho^{j-1}; stop once rho^j |xi| b_max < eps.
  while (scale * ratio_ * std::fabs(xi) * b_max >= eps_tail) {
    std::complex<double> factor(0.0, 0.0);
    for (double b : digits_) {
      double ang = -two_pi * xi * scale * b;
      factor += std::complex<double>(std::cos(ang), std::sin(ang));
    }
    prod *= factor / static_cast<double>(m_);
    scale *= ratio_;
    if (scale == 0.0) break;
  }
  return prod;
}

FourierTable::FourierTable(const SelfSimilarMeasure& mu, int max_frequency,
                           double eps_tail)
    : n_max_(max_frequency), eps_tail_(eps_tail) {
  if (max_frequency < 1) throw std::invalid_argument("max_frequency must be >= 1");
  if (static_cast<std::int64_t>(max_frequency) > (1LL << 26))
    throw std::length_error("fourier table exceeds memory cap");
  nonneg_.resize(n_max_ + 1);
  nonneg_[0] = {1.0, 0.0};
  for (int n = 1; n <= n_max_; ++n)
    nonneg_[n] = mu.fourier_coefficient(static_cast<double>(n), eps_tail);
}

std::complex<double> FourierTable::value(std::int64_t n) const {
  std::int64_t a = n < 0 ? -n : n;
  if (a > n_max_) throw std::out_of_range("frequency outside fourier table");
  return n < 0 ? std::conj(nonneg_[a]) : nonneg_[a];
}

void FourierTable::corrupt_for_test(int n, std::complex<double> v) {
  nonneg_.at(n) = v;
}

double plateau_bump(double xi, double edge) {
  double a = std::fabs(xi);
  if (a <= 0.5 * edge) return 1.0;
  if (a >= edge) return 0.0;
  // smoothstep from exp(-1/x): S(u) = h(u)/(h(u)+h(1-u)), h(u) = exp(-1/u)
  double u = (edge - a) / (0.5 * edge);  // 1 at plateau edge, 0 at support edge
  double hu = std::exp(-1.0 / u);
  double hv = std::exp(-1.0 / (1.0 - u));
  return hu / (hu + hv);
}

double lp_bracket(double xi, int p, int K, double R) {
  double edge = std::cbrt(R);
  double inner = plateau_bump(std::ldexp(xi, -2 * (p + K)), edge);
  double outer = plateau_bump(std::ldexp(xi, -2 * p), edge);
  return inner - outer;
}

std::map<std::int64_t, std::complex<double>> lp_piece_coefficients(
    const FourierTable& table, int p, int K, double R) {
  if (p < 0 || K < 1) throw std::invalid_argument("need p >= 0 and K >= 1");
  double edge = std::cbrt(R);
  double hi = edge * std::ldexp(1.0, 2 * (p + K));  // support bound R^{1/3} 4^{p+K}
  std::int64_t n_hi = static_cast<std::int64_t>(std::ceil(hi));
  if (!table.covers(n_hi)) throw std::out_of_range("band exceeds table range");
  std::map<std::int64_t, std::complex<double>> out;
  for (std::int64_t n = -n_hi; n <= n_hi; ++n) {
    double br = lp_bracket(static_cast<double>(n), p, K, R);
    if (br != 0.0) out[n] = table.value(n) * br;
  }
  return out;
}

RegularityConstants regularity_constants(const SelfSimilarMeasure& mu,
                                         int sample_count,
                                         const std::vector<double>& scales) {
  for (double r : scales)
    if (!(r > 0.0 && r <= 0.5))
      throw std::invalid_argument("scales must lie in (0, 1/2]");
  int gen = 0;
  std::int64_t n = 1;
  while (n < sample_count && gen < 40) {
    n *= mu.branch_count();
    ++gen;
  }
  auto pts = mu.atoms(gen);
  std::size_t stride = std::max<std::size_t>(1, pts.atoms.size() / sample_count);
  double c_low = 0.0, c_high = 0.0;
  bool first = true;
  for (std::size_t i = 0; i < pts.atoms.size(); i += stride) {
    double x = pts.atoms[i].position;
    for (double r : scales) {
      double ratio = mu.ball_mass(x, r) / std::pow(r, mu.dimension());
      if (first || ratio < c_low) c_low = ratio;
      if (first || ratio > c_high) c_high = ratio;
      first = false;
    }
  }
  return {c_low, c_high};
}

SelfSimilarMeasure quarter_cantor() {
  return SelfSimilarMeasure(2, 0.25, {0.0, 0.75}, "quarter");
}
SelfSimilarMeasure ninth_cantor() {
  return SelfSimilarMeasure(2, 1.0 / 9.0, {0.0, 8.0 / 9.0}, "ninth");
}
SelfSimilarMeasure middle_thirds_cantor() {
  return SelfSimilarMeasure(2, 1.0 / 3.0, {0.0, 2.0 / 3.0}, "thirds");
}
SelfSimilarMeasure lebesgue_measure() {
  return SelfSimilarMeasure(2, 0.5, {0.0, 0.5}, "lebesgue");
}

}  // namespace circext
