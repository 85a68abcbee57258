#pragma once

// Sup-norm of a bivariate homogeneous polynomial over the unit ball of l_p^2.
//
// The maximum of |P| over the ball is attained on the sphere, which is
// covered by two charts, (t, +-g(t)) and (+-g(t), t) with
// g(t) = (1 - |t|^p)^(1/p). Each of the four curves is sampled on a dense
// grid, every sampled local maximum is refined with Brent's method, and the
// largest refined value wins.

#include <cstdint>

#include "hlb/kernels.hpp"
#include "hlb/poly.hpp"

namespace hlb {

struct OptConfig {
  int coarse_grid = 20001;  ///< samples of t in [-1, 1] per curve; odd
  double local_tol = 1e-13;  ///< abscissa tolerance of each refinement
  int max_refine_iters = 200;
  int multistart_count = 32;  ///< simplex restarts in parameter searches
  std::uint64_t rng_seed = 0;

  // Parameter-search knobs.
  int search_coarse_grid = 1001;  ///< coarse_grid used inside the search loop
  int param_grid_budget = 4096;  ///< grid cells per normalized parameter box
  int max_simplex_evals = 600;
  int max_degree = kDefaultMaxDegree;

  /// Throws DomainError when a field is out of range.
  void validate() const;
};

struct SpherePoint {
  double x = 0.0;
  double y = 0.0;
};

/// (t, sign * (1 - |t|^p)^(1/p)); for p = inf, (t, sign).
SpherePoint sphere_point(double t, int sign, double p);

struct NormResult {
  double value = 0.0;
  SpherePoint argmax;
  double p = 0.0;
  int grid_size = 0;
  int refinement_iters = 0;  ///< Brent iterations summed over all candidates
  double est_error = 0.0;
};

NormResult sup_norm(const HomoPoly2& poly, double p, const OptConfig& cfg = {});

/// Reuses a precomputed grid; grid.size() overrides cfg.coarse_grid.
NormResult sup_norm(const HomoPoly2& poly, const SphereGrid& grid, const OptConfig& cfg);

/// Random-search lower estimate of the sup-norm: half the samples are drawn
/// uniformly in x on the first chart, half uniformly in y on the second, with
/// random signs. Independent of the grid and refinement machinery.
double sup_norm_oracle(const HomoPoly2& poly, double p, std::int64_t n_samples, std::uint64_t seed = 0);

}  // namespace hlb
