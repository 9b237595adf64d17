#include "circext/fft.hpp"

#include <fftw3.h>

#include <mutex>
#include <stdexcept>

namespace circext {

namespace {
std::mutex& plan_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace

Fft::Fft(std::size_t n) : n_(n) {
  if (n_ == 0) throw std::invalid_argument("Fft: zero length");
  std::lock_guard<std::mutex> lock(plan_mutex());
  // FFTW_ESTIMATE keeps plan selection deterministic run to run.
  plan_fwd_ = fftw_plan_dft_1d(static_cast<int>(n_), nullptr, nullptr,
                               FFTW_FORWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
  plan_inv_ = fftw_plan_dft_1d(static_cast<int>(n_), nullptr, nullptr,
                               FFTW_BACKWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
  if (!plan_fwd_ || !plan_inv_) throw std::runtime_error("Fft: planning failed");
}

Fft::~Fft() {
  std::lock_guard<std::mutex> lock(plan_mutex());
  fftw_destroy_plan(static_cast<fftw_plan>(plan_fwd_));
  fftw_destroy_plan(static_cast<fftw_plan>(plan_inv_));
}

void Fft::forward(std::complex<double>* data) const {
  auto* p = reinterpret_cast<fftw_complex*>(data);
  fftw_execute_dft(static_cast<fftw_plan>(plan_fwd_), p, p);
}

void Fft::inverse(std::complex<double>* data) const {
  auto* p = reinterpret_cast<fftw_complex*>(data);
  fftw_execute_dft(static_cast<fftw_plan>(plan_inv_), p, p);
}

std::size_t Fft::good_size(std::size_t n) {
  std::size_t best = ~std::size_t(0);
  for (std::size_t odd : {1, 3, 5, 9, 15}) {
    std::size_t v = odd;
    while (v < n) v *= 2;
    if (v >= n && v < best) best = v;
  }
  return best;
}

void ToeplitzOperator::init(std::vector<std::complex<double>> first_col_wrap) {
  len_ = Fft::good_size(first_col_wrap.size());
  fft_ = std::make_unique<Fft>(len_);
  symbol_hat_.assign(len_, {0.0, 0.0});
  // Circulant layout: entry i holds symbol(i) for i < n and symbol(i - len)
  // for the top; zero padding in the middle.
  for (std::size_t i = 0; i < n_; ++i) symbol_hat_[i] = first_col_wrap[i];
  for (std::size_t i = 1; i < n_; ++i)
    symbol_hat_[len_ - i] = first_col_wrap[2 * n_ - 1 - i];
  fft_->forward(symbol_hat_.data());
  work_.assign(len_, {0.0, 0.0});
}

void ToeplitzOperator::apply(const std::complex<double>* x,
                             std::complex<double>* y) const {
  for (std::size_t i = 0; i < n_; ++i) work_[i] = x[i];
  for (std::size_t i = n_; i < len_; ++i) work_[i] = {0.0, 0.0};
  fft_->forward(work_.data());
  double inv = 1.0 / static_cast<double>(len_);
  for (std::size_t i = 0; i < len_; ++i) work_[i] *= symbol_hat_[i] * inv;
  fft_->inverse(work_.data());
  for (std::size_t i = 0; i < n_; ++i) y[i] = work_[i];
}

}  // namespace circext
