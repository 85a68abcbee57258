#pragma once

// Downhill simplex (Nelder-Mead) minimization with standard coefficients.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace hlb::detail {

struct SimplexResult {
  std::vector<double> x;
  double fx;
  int evaluations;
};

template <typename F>
SimplexResult nelder_mead(F&& f, std::vector<double> start, const std::vector<double>& step, int max_evals,
                          double x_tol = 1e-11, double f_tol = 1e-14) {
  constexpr double kReflect = 1.0, kExpand = 2.0, kContract = 0.5, kShrink = 0.5;
  const std::size_t n = start.size();
  std::vector<std::vector<double>> pts(n + 1, start);
  for (std::size_t i = 0; i < n; ++i) pts[i + 1][i] += step[i];
  std::vector<double> fv(n + 1);
  int evals = 0;
  for (std::size_t i = 0; i <= n; ++i) {
    fv[i] = f(pts[i]);
    ++evals;
  }
  std::vector<std::size_t> order(n + 1);
  std::vector<double> centroid(n), trial(n), trial2(n);

  auto along = [&](double coef, const std::vector<double>& worst, std::vector<double>& out) {
    for (std::size_t k = 0; k < n; ++k) out[k] = centroid[k] + coef * (centroid[k] - worst[k]);
  };

  while (evals < max_evals) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
    const std::size_t best = order.front(), worst = order.back(), second = order[n - 1];

    double size = 0.0;
    for (std::size_t i = 0; i <= n; ++i) {
      for (std::size_t k = 0; k < n; ++k) size = std::max(size, std::abs(pts[i][k] - pts[best][k]));
    }
    if (size <= x_tol || std::abs(fv[worst] - fv[best]) <= f_tol * std::max(1.0, std::abs(fv[best]))) break;

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == worst) continue;
      for (std::size_t k = 0; k < n; ++k) centroid[k] += pts[i][k] / static_cast<double>(n);
    }

    along(kReflect, pts[worst], trial);
    const double fr = f(trial);
    ++evals;
    if (fr < fv[best]) {
      along(kExpand, pts[worst], trial2);
      const double fe = f(trial2);
      ++evals;
      if (fe < fr) {
        pts[worst] = trial2;
        fv[worst] = fe;
      } else {
        pts[worst] = trial;
        fv[worst] = fr;
      }
    } else if (fr < fv[second]) {
      pts[worst] = trial;
      fv[worst] = fr;
    } else {
      const bool outside = fr < fv[worst];
      along(outside ? kContract : -kContract, pts[worst], trial2);
      const double fc = f(trial2);
      ++evals;
      if (fc < std::min(fr, fv[worst])) {
        pts[worst] = trial2;
        fv[worst] = fc;
      } else {
        for (std::size_t i = 0; i <= n; ++i) {
          if (i == best) continue;
          for (std::size_t k = 0; k < n; ++k) pts[i][k] = pts[best][k] + kShrink * (pts[i][k] - pts[best][k]);
          fv[i] = f(pts[i]);
          ++evals;
        }
      }
    }
  }
  const auto it = std::min_element(fv.begin(), fv.end());
  return {pts[static_cast<std::size_t>(it - fv.begin())], *it, evals};
}

}  // namespace hlb::detail
