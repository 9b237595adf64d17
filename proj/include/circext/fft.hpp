#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

namespace circext {

/// Complex-to-complex FFT workspace of fixed length (FFTW backed).
/// One instance per worker; execution on its own buffers is reentrant-free,
/// plan creation is serialized internally.
class Fft {
 public:
  explicit Fft(std::size_t n);
  ~Fft();
  Fft(const Fft&) = delete;
  Fft& operator=(const Fft&) = delete;

  std::size_t size() const { return n_; }
  void forward(std::complex<double>* data) const;   // in place, unnormalized
  void inverse(std::complex<double>* data) const;   // in place, unnormalized

  /// Smallest supported smooth length >= n (powers of two times 1, 3, 5, 9).
  static std::size_t good_size(std::size_t n);

 private:
  std::size_t n_;
  void* plan_fwd_;
  void* plan_inv_;
};

/// y = T x for the Hermitian Toeplitz matrix T_{jk} = symbol(j-k), built by
/// circulant embedding; apply cost O(n log n).
class ToeplitzOperator {
 public:
  /// symbol(d) for d in [-(n-1), n-1]; access via callable.
  template <typename F>
  ToeplitzOperator(std::size_t n, F&& symbol) : n_(n) {
    std::vector<std::complex<double>> col(2 * n - 1);
    for (std::size_t i = 0; i < n; ++i) col[i] = symbol(static_cast<std::int64_t>(i));
    for (std::size_t i = 1; i < n; ++i)
      col[2 * n - 1 - i] = symbol(-static_cast<std::int64_t>(i));
    init(std::move(col));
  }

  std::size_t size() const { return n_; }

  /// y may alias x.
  void apply(const std::complex<double>* x, std::complex<double>* y) const;

 private:
  void init(std::vector<std::complex<double>> first_col_wrap);

  std::size_t n_ = 0;
  std::size_t len_ = 0;
  std::unique_ptr<Fft> fft_;
  std::vector<std::complex<double>> symbol_hat_;
  mutable std::vector<std::complex<double>> work_;
};

}  // namespace circext
