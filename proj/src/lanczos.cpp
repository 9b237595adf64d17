#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>
#include <vector>

#include "circext/operator.hpp"

namespace circext {

namespace {

using CVec = std::vector<std::complex<double>>;

// Real inner product of the stacked-real view: Re<x, y>.
double rdot(const CVec& x, const CVec& y) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i)
    s += x[i].real() * y[i].real() + x[i].imag() * y[i].imag();
  return s;
}

double rnorm(const CVec& x) { return std::sqrt(rdot(x, x)); }

void axpy(CVec& y, double a, const CVec& x) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
}

// Jacobi eigendecomposition of a small dense symmetric matrix (row-major).
// Eigenvectors come back as columns of V.
void small_sym_eig(std::vector<double>& A, int m, std::vector<double>& eval,
                   std::vector<double>& V) {
  V.assign(m * m, 0.0);
  for (int i = 0; i < m; ++i) V[i * m + i] = 1.0;
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < m; ++p)
      for (int q = p + 1; q < m; ++q) off += A[p * m + q] * A[p * m + q];
    if (off < 1e-30) break;
    for (int p = 0; p < m; ++p) {
      for (int q = p + 1; q < m; ++q) {
        double apq = A[p * m + q];
        if (std::fabs(apq) < 1e-300) continue;
        double theta = (A[q * m + q] - A[p * m + p]) / (2.0 * apq);
        double t = (theta >= 0 ? 1.0 : -1.0) /
                   (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
        for (int i = 0; i < m; ++i) {
          double aip = A[i * m + p], aiq = A[i * m + q];
          A[i * m + p] = c * aip - s * aiq;
          A[i * m + q] = s * aip + c * aiq;
        }
        for (int i = 0; i < m; ++i) {
          double api = A[p * m + i], aqi = A[q * m + i];
          A[p * m + i] = c * api - s * aqi;
          A[q * m + i] = s * api + c * aqi;
        }
        for (int i = 0; i < m; ++i) {
          double vip = V[i * m + p], viq = V[i * m + q];
          V[i * m + p] = c * vip - s * viq;
          V[i * m + q] = s * vip + c * viq;
        }
      }
    }
  }
  eval.assign(m, 0.0);
  for (int i = 0; i < m; ++i) eval[i] = A[i * m + i];
}

}  // namespace

LanczosResult lambda_max(const QuadraticForm& form, double tol, int max_iter) {
  if (!(tol > 0.0)) throw std::invalid_argument("lambda_max: tol must be > 0");
  const std::size_t n = form.dim();
  const int real_dim_cap = static_cast<int>(std::min<std::size_t>(2 * n, 1u << 20));
  const int basis_cap = std::min(real_dim_cap, 48);
  const int keep = std::min(10, basis_cap - 2);

  // Deterministic seeded start vector.
  std::mt19937_64 rng(0x5EED);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  CVec v(n);
  for (auto& z : v) z = {uni(rng), uni(rng)};
  double nv = rnorm(v);
  for (auto& z : v) z /= nv;

  std::vector<CVec> basis;
  basis.push_back(v);
  std::vector<double> T(basis_cap * basis_cap, 0.0);  // projected operator
  int m = 0;          // current basis size - 1 == index of working vector
  int total_iter = 0;
  LanczosResult out;

  CVec w(n);
  std::vector<double> Tc, eval, evec;

  auto top_ritz = [&](int dim, int& idx) {
    Tc.assign(dim * dim, 0.0);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) Tc[i * dim + j] = T[i * basis_cap + j];
    small_sym_eig(Tc, dim, eval, evec);
    idx = 0;
    for (int i = 1; i < dim; ++i)
      if (eval[i] > eval[idx]) idx = i;
    return eval[idx];
  };

  auto finish = [&](int dim, bool converged_flag) {
    int idx;
    top_ritz(dim, idx);
    CVec x(n, {0.0, 0.0});
    for (int i = 0; i < dim; ++i) axpy(x, evec[i * dim + idx], basis[i]);
    double nx = rnorm(x);
    if (nx > 0)
      for (auto& z : x) z /= nx;
    form.apply(x.data(), w.data());
    double lam = rdot(x, w);
    axpy(w, -lam, x);
    out.lambda = lam;
    out.residual = rnorm(w);
    out.iterations = total_iter;
    out.converged = converged_flag || out.residual <= tol * std::max(std::fabs(lam), 1e-300);
    return out;
  };

  while (total_iter < max_iter) {
    // One Lanczos step from basis[m].
    form.apply(basis[m].data(), w.data());
    ++total_iter;
    // Project out every basis vector (full reorthogonalization, two passes).
    // Pass 0 records column m of the projected operator.
    for (int pass = 0; pass < 2; ++pass) {
      for (int i = 0; i <= m; ++i) {
        double c = rdot(w, basis[i]);
        if (pass == 0) {
          T[i * basis_cap + m] = c;
          T[m * basis_cap + i] = c;
        }
        axpy(w, -c, basis[i]);
      }
    }
    double beta = rnorm(w);

    int dim = m + 1;
    int idx;
    double theta = top_ritz(dim, idx);
    double res_est = beta * std::fabs(evec[m * dim + idx]);
    bool krylov_exhausted = beta < 1e-14 * std::max(1.0, std::fabs(theta)) ||
                            dim >= real_dim_cap;
    if (res_est <= tol * std::max(std::fabs(theta), 1e-300) || krylov_exhausted ||
        total_iter >= max_iter) {
      bool flag = res_est <= tol * std::max(std::fabs(theta), 1e-300) || krylov_exhausted;
      return finish(dim, flag);
    }

    if (dim == basis_cap) {
      // Thick restart: keep the top `keep` Ritz vectors plus the residual.
      top_ritz(dim, idx);
      std::vector<int> order(dim);
      for (int i = 0; i < dim; ++i) order[i] = i;
      std::sort(order.begin(), order.end(),
                [&](int a, int b) { return eval[a] > eval[b]; });
      int l = std::min(keep, dim);
      std::vector<CVec> newbasis;
      newbasis.reserve(l + 1);
      for (int j = 0; j < l; ++j) {
        CVec y(n, {0.0, 0.0});
        for (int i = 0; i < dim; ++i)
          axpy(y, evec[i * dim + order[j]], basis[i]);
        newbasis.push_back(std::move(y));
      }
      CVec vnext = w;
      for (auto& z : vnext) z /= beta;
      newbasis.push_back(std::move(vnext));
      // Columns 0..l-1 are final (diag theta); the border couplings to the
      // residual vector are recomputed by the next projection pass.
      std::fill(T.begin(), T.end(), 0.0);
      for (int j = 0; j < l; ++j) T[j * basis_cap + j] = eval[order[j]];
      basis = std::move(newbasis);
      m = l;
      continue;
    }

    CVec vnext = w;
    for (auto& z : vnext) z /= beta;
    basis.push_back(std::move(vnext));
    ++m;
  }
  return finish(m + 1, false);
}

}  // namespace circext
