#include "circext/oracle.hpp"

#include <mpfr.h>

#include <stdexcept>

namespace circext::oracle {

double bessel_j(int k, double r, int precision_bits) {
  if (k < 0 || r < 0.0)
    throw std::invalid_argument("oracle::bessel_j: need k >= 0, r >= 0");
  mpfr_t half, q, term, sum, tmp;
  mpfr_inits2(precision_bits, half, q, term, sum, tmp, (mpfr_ptr)nullptr);
  mpfr_set_d(half, r, MPFR_RNDN);
  mpfr_div_ui(half, half, 2, MPFR_RNDN);
  // term = (r/2)^k / k!
  mpfr_set_ui(term, 1, MPFR_RNDN);
  for (int i = 1; i <= k; ++i) {
    mpfr_mul(term, term, half, MPFR_RNDN);
    mpfr_div_ui(term, term, i, MPFR_RNDN);
  }
  mpfr_set(sum, term, MPFR_RNDN);
  mpfr_mul(q, half, half, MPFR_RNDN);
  for (int m = 1; m < 100000; ++m) {
    mpfr_mul(term, term, q, MPFR_RNDN);
    mpfr_div_ui(term, term, static_cast<unsigned long>(m), MPFR_RNDN);
    mpfr_div_ui(term, term, static_cast<unsigned long>(k + m), MPFR_RNDN);
    mpfr_neg(term, term, MPFR_RNDN);
    mpfr_add(sum, sum, term, MPFR_RNDN);
    // Factorial decay takes over past m ~ r/2; |J| <= 1, so an absolute
    // cutoff far below double precision is safe.
    mpfr_abs(tmp, term, MPFR_RNDN);
    if (m > r && mpfr_cmp_d(tmp, 1e-120) < 0) break;
  }
  double out = mpfr_get_d(sum, MPFR_RNDN);
  mpfr_clears(half, q, term, sum, tmp, (mpfr_ptr)nullptr);
  return out;
}

}  // namespace circext::oracle
