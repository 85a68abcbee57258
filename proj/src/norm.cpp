#include "hlb/norm.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "brent.hpp"
#include "hlb/error.hpp"

namespace hlb {

void OptConfig::validate() const {
  if (coarse_grid < 3 || coarse_grid % 2 == 0) throw DomainError("coarse_grid must be odd and >= 3");
  if (search_coarse_grid < 3 || search_coarse_grid % 2 == 0) {
    throw DomainError("search_coarse_grid must be odd and >= 3");
  }
  if (!(local_tol > 0.0)) throw DomainError("local_tol must be positive");
  if (max_refine_iters < 1) throw DomainError("max_refine_iters must be >= 1");
  if (multistart_count < 1) throw DomainError("multistart_count must be >= 1");
  if (param_grid_budget < 2) throw DomainError("param_grid_budget must be >= 2");
  if (max_simplex_evals < 1) throw DomainError("max_simplex_evals must be >= 1");
  if (max_degree < 1) throw DomainError("max_degree must be >= 1");
}

SpherePoint sphere_point(double t, int sign, double p) {
  const double g = sphere_complement(t, p);
  return {t, g == 0.0 ? 0.0 : (sign < 0 ? -g : g)};
}

namespace {

void check_p(double p) {
  if (std::isnan(p) || p < 1.0) throw DomainError("sup norm needs p >= 1 (or inf)");
}

// One of the four sphere curves, written as a polynomial in (t, g(t)).
struct Curve {
  std::vector<double> coeffs;
  bool swapped;  // point is (sign g, t) instead of (t, sign g)
  int sign;

  SpherePoint point(double t, double g) const {
    const double sg = g == 0.0 ? 0.0 : sign * g;
    return swapped ? SpherePoint{sg, t} : SpherePoint{t, sg};
  }
};

std::array<Curve, 4> make_curves(const HomoPoly2& poly) {
  const HomoPoly2 sw = poly.swapped(), pr = poly.reflected(), swr = sw.reflected();
  const std::vector<double> c(poly.coeffs().begin(), poly.coeffs().end());
  const std::vector<double> cr(pr.coeffs().begin(), pr.coeffs().end());
  const std::vector<double> s(sw.coeffs().begin(), sw.coeffs().end());
  const std::vector<double> sr(swr.coeffs().begin(), swr.coeffs().end());
  return {Curve{c, false, 1}, Curve{cr, false, -1}, Curve{s, true, 1}, Curve{sr, true, -1}};
}

struct Candidate {
  double value;
  SpherePoint point;
  double est_error;
  bool conditioned;  ///< |dg/dt| <= 2 at the peak, so the chart resolves it
};

// Equal up to a few ulps.
bool nearly_equal(double a, double b) {
  return std::abs(a - b) <= 8.0 * std::numeric_limits<double>::epsilon() * std::max(a, b);
}

// Deterministic preference among (nearly) equal maxima: smallest |x|, then
// larger y, then larger x.
bool preferred(const Candidate& a, const Candidate& b) {
  if (!nearly_equal(a.value, b.value)) return a.value > b.value;
  if (std::abs(a.point.x) != std::abs(b.point.x)) return std::abs(a.point.x) < std::abs(b.point.x);
  if (a.point.y != b.point.y) return a.point.y > b.point.y;
  return a.point.x > b.point.x;
}

}  // namespace

NormResult sup_norm(const HomoPoly2& poly, double p, const OptConfig& cfg) {
  check_p(p);
  cfg.validate();
  return sup_norm(poly, make_sphere_grid(p, cfg.coarse_grid), cfg);
}

NormResult sup_norm(const HomoPoly2& poly, const SphereGrid& grid, const OptConfig& cfg) {
  check_p(grid.p);
  if (poly.is_zero()) throw DomainError("sup norm of the zero polynomial");
  const double p = grid.p;
  const int n = grid.size();
  if (n < 3) throw DomainError("sphere grid too small");

  std::vector<double> values(static_cast<std::size_t>(n));
  std::vector<Candidate> candidates;
  int total_iters = 0;
  double best_seen = 0.0;

  // |dg/dt| = (|t|/g)^(p-1); the slack absorbs the sqrt(eps) abscissa error
  // of peaks that sit on the diagonal, where both charts meet.
  const double slack = std::isinf(p) || p == 1.0 ? 2.0 : std::pow(2.0, 1.0 / (p - 1.0));
  for (const Curve& curve : make_curves(poly)) {
    scan_abs(curve.coeffs, grid, values);
    auto f = [&curve, p](double t) { return std::abs(evaluate(curve.coeffs, t, sphere_complement(t, p))); };

    for (int i = 0; i < n;) {
      int j = i;
      while (j + 1 < n && values[static_cast<std::size_t>(j + 1)] == values[static_cast<std::size_t>(i)]) ++j;
      const double vi = values[static_cast<std::size_t>(i)];
      const bool left_ok = i == 0 || values[static_cast<std::size_t>(i - 1)] < vi;
      const bool right_ok = j == n - 1 || values[static_cast<std::size_t>(j + 1)] < vi;
      if (left_ok && right_ok && vi > 0.0) {
        const int mid = (i + j) / 2;
        const double lo = grid.t[static_cast<std::size_t>(std::max(i - 1, 0))];
        const double hi = grid.t[static_cast<std::size_t>(std::min(j + 1, n - 1))];
        const double x0 = grid.t[static_cast<std::size_t>(mid)];
        const auto r = detail::brent_maximize(f, lo, hi, x0, vi, cfg.local_tol, cfg.max_refine_iters);
        total_iters += r.iters;
        best_seen = std::max(best_seen, r.fx);
        if (!r.converged) {
          throw ConvergenceError("sup norm refinement did not converge in " + std::to_string(cfg.max_refine_iters) +
                                     " iterations",
                                 best_seen);
        }
        double est = 0.0;
        if (std::abs(r.x) != 1.0) {
          const double edge = std::min(f(r.lo), f(r.hi));
          est = std::max(0.0, r.fx - edge);
        }
        const double g = sphere_complement(r.x, p);
        candidates.push_back({r.fx, curve.point(r.x, g), est, std::abs(r.x) == 1.0 || std::abs(r.x) <= g * slack});
      }
      i = j + 1;
    }
  }
  if (candidates.empty()) throw ConvergenceError("no local maximum found on the sphere", 0.0);
  // Every point of the sphere is in the conditioned half of some chart, so a
  // peak seen near a chart's steep end is also seen by the other chart.
  if (std::any_of(candidates.begin(), candidates.end(), [](const Candidate& c) { return c.conditioned; })) {
    std::erase_if(candidates, [](const Candidate& c) { return !c.conditioned; });
  }

  const auto best_it = std::min_element(candidates.begin(), candidates.end(), preferred);
  const Candidate best = *best_it;

  // The same peak reached through another chart or sign branch.
  double spread = 0.0;
  for (const Candidate& c : candidates) {
    const double dist = std::abs(c.point.x - best.point.x) + std::abs(c.point.y - best.point.y);
    if (dist <= 1e-6) spread = std::max(spread, std::abs(c.value - best.value));
  }

  NormResult out;
  out.argmax = best.point;
  out.value = std::abs(evaluate(poly, best.point.x, best.point.y));
  out.p = p;
  out.grid_size = n;
  out.refinement_iters = total_iters;
  out.est_error = std::max(best.est_error, spread);
  return out;
}

double sup_norm_oracle(const HomoPoly2& poly, double p, std::int64_t n_samples, std::uint64_t seed) {
  check_p(p);
  if (n_samples < 1) throw DomainError("oracle needs at least one sample");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(-1.0, 1.0);
  double best = 0.0;
  for (std::int64_t i = 0; i < n_samples; ++i) {
    const double u = uniform(rng);
    const int sign = (rng() & 1U) != 0U ? 1 : -1;
    const double g = sign * sphere_complement(u, p);
    const double v = (i % 2 == 0) ? evaluate(poly, u, g) : evaluate(poly, g, u);
    best = std::max(best, std::abs(v));
  }
  return best;
}

}  // namespace hlb
