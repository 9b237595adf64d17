#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "circext/bessel.hpp"
#include "circext/operator.hpp"

namespace circext {

int default_band(double r) {
  return static_cast<int>(std::ceil(1.3 * r)) + 200;
}

QuadraticForm::QuadraticForm(const FourierTable& table, double r, int K)
    : r_(r), K_(K), table_(&table) {
  if (K < 0) throw std::invalid_argument("QuadraticForm: negative band");
  if (!table.covers(2 * static_cast<std::int64_t>(K)))
    throw std::out_of_range("QuadraticForm: table must cover |n| <= 2K");

  // J_{|k|}(r) is below 1e-200 once |k| > r + 63 r^{1/3}; restricting the
  // Toeplitz block to that range changes G by less than 1e-200 relatively.
  int k_support = static_cast<int>(std::ceil(r + 63.0 * std::cbrt(std::max(r, 1.0)))) + 8;
  K_eff_ = std::min(K_, k_support);

  BesselVector bv = bessel_vector(r, K_eff_);
  std::size_t n_eff = 2 * static_cast<std::size_t>(K_eff_) + 1;
  diag_.resize(n_eff);
  for (int k = -K_eff_; k <= K_eff_; ++k)
    diag_[k + K_eff_] = bv.values[std::abs(k)];

  double off_mass = 0.0;
  for (int d = 1; d <= 2 * K_eff_; ++d)
    off_mass = std::max(off_mass, std::abs(table.value(d)));
  delta_symbol_ = off_mass < 1e-13;
  if (!delta_symbol_) {
    toeplitz_ = std::make_unique<ToeplitzOperator>(
        n_eff, [&table](std::int64_t d) { return table.value(d); });
  }
  work_.assign(n_eff, {0.0, 0.0});
}

double QuadraticForm::diag(std::int64_t k) const {
  std::int64_t a = k < 0 ? -k : k;
  if (a > K_) throw std::out_of_range("QuadraticForm::diag: outside band");
  if (a > K_eff_) return 0.0;
  return diag_[k + K_eff_];
}

std::complex<double> QuadraticForm::entry(std::int64_t j, std::int64_t k) const {
  return diag(j) * table_->value(j - k) * diag(k);
}

void QuadraticForm::apply(const std::complex<double>* x,
                          std::complex<double>* y) const {
  std::size_t n = dim();
  std::size_t n_eff = 2 * static_cast<std::size_t>(K_eff_) + 1;
  std::size_t off = static_cast<std::size_t>(K_ - K_eff_);
  for (std::size_t i = 0; i < n_eff; ++i) work_[i] = diag_[i] * x[i + off];
  if (delta_symbol_) {
    for (std::size_t i = 0; i < n_eff; ++i) work_[i] *= diag_[i];
  } else {
    toeplitz_->apply(work_.data(), work_.data());
    for (std::size_t i = 0; i < n_eff; ++i) work_[i] *= diag_[i];
  }
  for (std::size_t i = 0; i < n; ++i) y[i] = {0.0, 0.0};
  for (std::size_t i = 0; i < n_eff; ++i) y[i + off] = work_[i];
}

std::vector<std::complex<double>> QuadraticForm::apply(
    const std::vector<std::complex<double>>& x) const {
  if (x.size() != dim())
    throw std::invalid_argument("QuadraticForm::apply: length mismatch");
  std::vector<std::complex<double>> y(x.size());
  apply(x.data(), y.data());
  return y;
}

}  // namespace circext
