#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

#include "circext/operator.hpp"

namespace circext {

EnergyResult energy(const FourierTable& table, double R, int radius_grid,
                    double tol, int threads) {
  if (radius_grid < 1) throw std::invalid_argument("energy: radius_grid >= 1");
  double r13 = std::cbrt(R);
  std::vector<double> radii(radius_grid);
  for (int i = 0; i < radius_grid; ++i)
    radii[i] = R + r13 * ((2.0 * i + 1.0) / radius_grid - 1.0);

  std::vector<LanczosResult> results(radius_grid);
  auto solve_one = [&](int i) {
    QuadraticForm form(table, radii[i], default_band(radii[i]));
    results[i] = lambda_max(form, tol);
  };

  int workers = std::max(1, std::min(threads, radius_grid));
  if (workers == 1) {
    for (int i = 0; i < radius_grid; ++i) solve_one(i);
  } else {
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    for (int t = 0; t < workers; ++t)
      pool.emplace_back([&] {
        for (int i = next.fetch_add(1); i < radius_grid; i = next.fetch_add(1))
          solve_one(i);
      });
    for (auto& th : pool) th.join();
  }

  EnergyResult best;
  best.R = R;
  for (int i = 0; i < radius_grid; ++i) {
    if (i == 0 || results[i].lambda > best.lambda_max) {
      best.lambda_max = results[i].lambda;
      best.r_star = radii[i];
      best.lanczos_iterations = results[i].iterations;
      best.residual = results[i].residual;
    }
  }
  best.energy = R * best.lambda_max;
  return best;
}

}  // namespace circext
