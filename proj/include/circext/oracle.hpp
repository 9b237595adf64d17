#pragma once

namespace circext::oracle {

/// J_k(r) summed in extended precision (MPFR, 512 bits by default).
/// Independent of the production recurrence path; reliable for r <= 200,
/// where the worst series cancellation stays far below the working precision.
double bessel_j(int k, double r, int precision_bits = 512);

}  // namespace circext::oracle
