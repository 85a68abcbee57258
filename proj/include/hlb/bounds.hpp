#pragma once

// Lower bounds for the real polynomial Hardy-Littlewood constants from
// explicit two-variable witnesses: any nonzero P of degree m gives
// C_{m,p} >= |P|_q / ||P||_p with q the Hardy-Littlewood exponent.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hlb/norm.hpp"
#include "hlb/poly.hpp"

namespace hlb {

/// 2mp/(mp + p - 2m) for p >= 2m (2m/(m+1) at p = inf), p/(p - m) for m < p < 2m.
double hl_exponent(int m, double p);

struct BoundReport {
  std::string family;  ///< family name, or "custom"
  std::vector<double> params;
  int m = 0;
  double p = 0.0;
  double q = 0.0;
  double coeff_norm = 0.0;
  double sup_norm = 0.0;
  double lower_bound = 0.0;
  double per_degree_root = 0.0;
  SpherePoint argmax;
  double est_error = 0.0;
};

BoundReport lower_bound(const HomoPoly2& poly, double p, const OptConfig& cfg = {});
BoundReport lower_bound(FamilyId family, std::span<const double> params, double p, const OptConfig& cfg = {});

enum class SearchMode { GridSimplex, CoordinateSweep };

std::string_view search_mode_name(SearchMode mode);
SearchMode parse_search_mode(std::string_view name);

struct OptimizeResult {
  /// Natural normalization: a = 1 for P3/P6, the built-in middle 1 for P10,
  /// largest-magnitude parameter = 1 for P5/P7/P8, raw a for P2.
  std::vector<double> params;
  /// Same point rescaled so the normalizing parameter matches the scale of
  /// the published parameter sets (c, d and b for P5, P7 and P8).
  std::vector<double> reference_params;
  int fixed_index = -1;
  BoundReport report;
  SearchMode mode = SearchMode::GridSimplex;
  long evaluations = 0;
};

OptimizeResult optimize_parameters(FamilyId family, double p, const OptConfig& cfg = {},
                                   SearchMode mode = SearchMode::GridSimplex);

struct SweepPoint {
  double lambda;
  double quotient;
};

/// Quotient of build(a = 1, b = lambda) for lambda = lo, lo + step, ..., <= hi.
/// Only for the two-parameter families P3, P6, P8, P10.
std::vector<SweepPoint> parameter_sweep(FamilyId family, double p, double lo, double hi, double step,
                                        const OptConfig& cfg = {});

/// Finite-degree estimate of the hypercontractivity constant from P^k on
/// l_{2M}^2 with M = deg(P) k.
struct HyperReport {
  std::string base_family;
  std::vector<double> base_params;
  int power = 0;
  int M = 0;
  double p = 0.0;
  double coeff_norm = 0.0;  ///< |P^k|_2
  double base_sup = 0.0;  ///< ||P|| on l_p^2; ||P^k|| = base_sup^k
  double log_lower_bound = 0.0;
  double lower_bound = 0.0;
  double h_estimate = 0.0;  ///< lower_bound^(1/M)
};

HyperReport hyper_estimate(const HomoPoly2& base, int k, const OptConfig& cfg = {});
HyperReport hyper_estimate(FamilyId family, std::span<const double> params, int k, const OptConfig& cfg = {});

}  // namespace hlb
