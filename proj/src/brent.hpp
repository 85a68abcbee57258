#pragma once

// Brent's derivative-free maximization on a bracket (parabolic interpolation
// with golden-section fallback).

#include <cmath>

namespace hlb::detail {

struct BrentResult {
  double x;
  double fx;
  double lo;  ///< final bracket
  double hi;
  int iters;
  bool converged;
};

/// Maximizes f on [lo, hi] starting from x0 (with f(x0) == fx0). The result
/// is never worse than the start.
template <typename F>
BrentResult brent_maximize(F&& f, double lo, double hi, double x0, double fx0, double tol, int max_iters) {
  constexpr double kGolden = 0.3819660112501051;
  constexpr double kRelEps = 4.440892098500626e-16;

  double a = lo;
  double b = hi;
  double x = x0, w = x0, v = x0;
  // Internally minimize -f.
  double fx = -fx0, fw = fx, fv = fx;
  double d = 0.0, e = 0.0;

  for (int it = 0; it < max_iters; ++it) {
    const double xm = 0.5 * (a + b);
    const double tol1 = kRelEps * std::abs(x) + tol / 3.0;
    const double tol2 = 2.0 * tol1;
    if (std::abs(x - xm) <= tol2 - 0.5 * (b - a)) {
      return {x, -fx, a, b, it, true};
    }
    bool golden = true;
    if (std::abs(e) > tol1) {
      double r = (x - w) * (fx - fv);
      double q = (x - v) * (fx - fw);
      double p = (x - v) * q - (x - w) * r;
      q = 2.0 * (q - r);
      if (q > 0.0) {
        p = -p;
      } else {
        q = -q;
      }
      const double e_prev = e;
      e = d;
      if (std::abs(p) < std::abs(0.5 * q * e_prev) && p > q * (a - x) && p < q * (b - x)) {
        d = p / q;
        const double u = x + d;
        if (u - a < tol2 || b - u < tol2) d = xm >= x ? tol1 : -tol1;
        golden = false;
      }
    }
    if (golden) {
      e = x >= xm ? a - x : b - x;
      d = kGolden * e;
    }
    const double u = std::abs(d) >= tol1 ? x + d : x + (d > 0.0 ? tol1 : -tol1);
    const double fu = -f(u);
    if (fu <= fx) {
      if (u >= x) {
        a = x;
      } else {
        b = x;
      }
      v = w;
      fv = fw;
      w = x;
      fw = fx;
      x = u;
      fx = fu;
    } else {
      if (u < x) {
        a = u;
      } else {
        b = u;
      }
      if (fu <= fw || w == x) {
        v = w;
        fv = fw;
        w = u;
        fw = fu;
      } else if (fu <= fv || v == x || v == w) {
        v = u;
        fv = fu;
      }
    }
  }
  return {x, -fx, a, b, max_iters, false};
}

}  // namespace hlb::detail
