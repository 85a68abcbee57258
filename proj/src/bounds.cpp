#include "hlb/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <string>

#include "brent.hpp"
#include "hlb/error.hpp"
#include "nelder_mead.hpp"

namespace hlb {

double hl_exponent(int m, double p) {
  if (m < 1) throw DomainError("degree must be >= 1");
  if (std::isnan(p) || p <= m) throw DomainError("Hardy-Littlewood exponent needs p > m");
  const double md = m;
  if (std::isinf(p)) return 2.0 * md / (md + 1.0);
  if (p >= 2.0 * md) return 2.0 * md * p / (md * p + p - 2.0 * md);
  return p / (p - md);
}

namespace {

BoundReport assemble(const HomoPoly2& poly, double p, double q, const NormResult& nr) {
  BoundReport r;
  r.family = "custom";
  r.m = poly.degree();
  r.p = p;
  r.q = q;
  r.coeff_norm = coefficient_norm(poly, q);
  r.sup_norm = nr.value;
  r.lower_bound = r.coeff_norm / r.sup_norm;
  r.per_degree_root = std::pow(r.lower_bound, 1.0 / r.m);
  r.argmax = nr.argmax;
  r.est_error = nr.est_error;
  return r;
}

}  // namespace

BoundReport lower_bound(const HomoPoly2& poly, double p, const OptConfig& cfg) {
  const double q = hl_exponent(poly.degree(), p);
  return assemble(poly, p, q, sup_norm(poly, p, cfg));
}

BoundReport lower_bound(FamilyId family, std::span<const double> params, double p, const OptConfig& cfg) {
  BoundReport r = lower_bound(build_family(family, params), p, cfg);
  r.family = std::string(family_name(family));
  r.params.assign(params.begin(), params.end());
  return r;
}

std::string_view search_mode_name(SearchMode mode) {
  return mode == SearchMode::GridSimplex ? "grid-simplex" : "coordinate-sweep";
}

SearchMode parse_search_mode(std::string_view name) {
  if (name == "grid-simplex") return SearchMode::GridSimplex;
  if (name == "coordinate-sweep") return SearchMode::CoordinateSweep;
  throw DomainError("unknown search mode '" + std::string(name) + "' (grid-simplex or coordinate-sweep)");
}

// ---------------------------------------------------------------------------
// Parameter search

namespace {

// A normalized box of free parameters mapped onto a family's parameters.
struct SearchSpace {
  std::vector<double> lo;
  std::vector<double> hi;
  int fixed_index = -1;
  std::function<std::vector<double>(std::span<const double>)> to_params;

  int dim() const { return static_cast<int>(lo.size()); }
};

std::vector<SearchSpace> search_spaces(FamilyId family) {
  std::vector<SearchSpace> spaces;
  switch (family) {
    case FamilyId::P2:
      spaces.push_back({{1e-9}, {1.0 - 1e-9}, -1, [](std::span<const double> x) { return std::vector<double>{x[0]}; }});
      break;
    case FamilyId::P3:
    case FamilyId::P6:
      spaces.push_back({{-8.0}, {8.0}, 0, [](std::span<const double> x) { return std::vector<double>{1.0, x[0]}; }});
      break;
    case FamilyId::P10:
      spaces.push_back(
          {{-2.0, -2.0}, {2.0, 2.0}, -1, [](std::span<const double> x) { return std::vector<double>{x[0], x[1]}; }});
      break;
    case FamilyId::P5:
    case FamilyId::P7:
    case FamilyId::P8: {
      // Every nonzero parameter vector has a largest-magnitude entry; scale it to 1.
      const int arity = family_spec(family).arity();
      for (int fixed = 0; fixed < arity; ++fixed) {
        SearchSpace s;
        s.lo.assign(static_cast<std::size_t>(arity - 1), -1.0);
        s.hi.assign(static_cast<std::size_t>(arity - 1), 1.0);
        s.fixed_index = fixed;
        s.to_params = [fixed, arity](std::span<const double> x) {
          std::vector<double> params;
          params.reserve(static_cast<std::size_t>(arity));
          for (int i = 0, k = 0; i < arity; ++i) params.push_back(i == fixed ? 1.0 : x[static_cast<std::size_t>(k++)]);
          return params;
        };
        spaces.push_back(std::move(s));
      }
      break;
    }
  }
  return spaces;
}

// Index and value of the published normalizing parameter (P5: c, P7: d, P8: b).
std::pair<int, double> reference_scale(FamilyId family) {
  switch (family) {
    case FamilyId::P5:
      return {2, 0.541712};
    case FamilyId::P7:
      return {3, 0.8};
    case FamilyId::P8:
      return {1, 0.896551};
    default:
      return {-1, 1.0};
  }
}

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

class QuotientObjective {
 public:
  QuotientObjective(FamilyId family, double p, const OptConfig& cfg, int grid_size)
      : family_(family),
        q_(hl_exponent(family_spec(family).degree, p)),
        cfg_(cfg),
        grid_(make_sphere_grid(p, grid_size)) {}

  double operator()(std::span<const double> params) const {
    try {
      const HomoPoly2 poly = build_family(family_, params);
      if (poly.is_zero()) return kNegInf;
      return coefficient_norm(poly, q_) / sup_norm(poly, grid_, cfg_).value;
    } catch (const DomainError&) {
      return kNegInf;
    }
  }

 private:
  FamilyId family_;
  double q_;
  OptConfig cfg_;
  SphereGrid grid_;
};

struct Point {
  int space;
  std::vector<double> x;
  double value;
};

bool better_point(const Point& a, const Point& b) {
  if (a.value != b.value) return a.value > b.value;
  if (a.space != b.space) return a.space < b.space;
  return a.x < b.x;
}

std::vector<Point> grid_phase(const std::vector<SearchSpace>& spaces, const QuotientObjective& objective,
                              const OptConfig& cfg, long& evaluations) {
  std::vector<Point> all;
  const int per_space = std::max(2, cfg.param_grid_budget / static_cast<int>(spaces.size()));
  for (int s = 0; s < static_cast<int>(spaces.size()); ++s) {
    const SearchSpace& space = spaces[static_cast<std::size_t>(s)];
    const int d = space.dim();
    const int per_axis = std::max(2, static_cast<int>(std::floor(std::pow(per_space, 1.0 / d) + 1e-9)));
    long total = 1;
    for (int k = 0; k < d; ++k) total *= per_axis;

    std::vector<Point> nodes(static_cast<std::size_t>(total));
    for (long idx = 0; idx < total; ++idx) {
      Point& pt = nodes[static_cast<std::size_t>(idx)];
      pt.space = s;
      pt.x.resize(static_cast<std::size_t>(d));
      long rest = idx;
      for (int k = 0; k < d; ++k) {
        const long i = rest % per_axis;
        rest /= per_axis;
        const auto kk = static_cast<std::size_t>(k);
        pt.x[kk] = space.lo[kk] + (space.hi[kk] - space.lo[kk]) * static_cast<double>(i) / (per_axis - 1);
      }
    }
#pragma omp parallel for schedule(dynamic, 16)
    for (long idx = 0; idx < total; ++idx) {
      Point& pt = nodes[static_cast<std::size_t>(idx)];
      pt.value = objective(space.to_params(pt.x));
    }
    evaluations += total;
    all.insert(all.end(), std::make_move_iterator(nodes.begin()), std::make_move_iterator(nodes.end()));
  }
  std::sort(all.begin(), all.end(), better_point);
  return all;
}

double axis_spacing(const SearchSpace& space, int k, const OptConfig& cfg, std::size_t n_spaces) {
  const int per_space = std::max(2, cfg.param_grid_budget / static_cast<int>(n_spaces));
  const int per_axis = std::max(2, static_cast<int>(std::floor(std::pow(per_space, 1.0 / space.dim()) + 1e-9)));
  const auto kk = static_cast<std::size_t>(k);
  return (space.hi[kk] - space.lo[kk]) / (per_axis - 1);
}

Point simplex_refine(const Point& start, const std::vector<SearchSpace>& spaces, const QuotientObjective& objective,
                     const OptConfig& cfg, std::mt19937_64& rng, long& evaluations) {
  const SearchSpace& space = spaces[static_cast<std::size_t>(start.space)];
  std::uniform_real_distribution<double> jitter(0.5, 1.0);
  std::vector<double> step(start.x.size());
  for (int k = 0; k < space.dim(); ++k) {
    const double sign = (rng() & 1U) != 0U ? 1.0 : -1.0;
    step[static_cast<std::size_t>(k)] = sign * jitter(rng) * axis_spacing(space, k, cfg, spaces.size());
  }
  auto f = [&](const std::vector<double>& x) {
    const double v = objective(space.to_params(x));
    return std::isfinite(v) ? -v : std::numeric_limits<double>::max();
  };
  const auto r = detail::nelder_mead(f, start.x, step, cfg.max_simplex_evals);
  evaluations += r.evaluations;
  return {start.space, r.x, -r.fx};
}

Point coordinate_refine(const Point& start, const std::vector<SearchSpace>& spaces,
                        const QuotientObjective& objective, const OptConfig& cfg, long& evaluations) {
  constexpr int kLineSamples = 41;
  constexpr int kMaxCycles = 100;
  const SearchSpace& space = spaces[static_cast<std::size_t>(start.space)];
  Point cur = start;
  for (int cycle = 0; cycle < kMaxCycles; ++cycle) {
    const double before = cur.value;
    for (int k = 0; k < space.dim(); ++k) {
      const auto kk = static_cast<std::size_t>(k);
      auto along = [&](double v) {
        std::vector<double> x = cur.x;
        x[kk] = v;
        ++evaluations;
        return objective(space.to_params(x));
      };
      // Fix the other parameters and vary this one over its range.
      const double lo = space.lo[kk], hi = space.hi[kk];
      double best_v = cur.x[kk], best_f = cur.value;
      int best_i = -1;
      for (int i = 0; i < kLineSamples; ++i) {
        const double v = lo + (hi - lo) * i / (kLineSamples - 1);
        const double fv = along(v);
        if (fv > best_f) {
          best_f = fv;
          best_v = v;
          best_i = i;
        }
      }
      const double h = best_i >= 0 ? (hi - lo) / (kLineSamples - 1) : axis_spacing(space, k, cfg, spaces.size()) / 4;
      const auto r = detail::brent_maximize(along, best_v - h, best_v + h, best_v, best_f, 1e-12, 200);
      cur.x[kk] = r.x;
      cur.value = r.fx;
    }
    if (!(cur.value > before * (1.0 + 1e-13))) break;
  }
  return cur;
}

}  // namespace

OptimizeResult optimize_parameters(FamilyId family, double p, const OptConfig& cfg, SearchMode mode) {
  cfg.validate();
  const FamilySpec& spec = family_spec(family);
  hl_exponent(spec.degree, p);  // validates p > m

  const std::vector<SearchSpace> spaces = search_spaces(family);
  const QuotientObjective search_objective(family, p, cfg, cfg.search_coarse_grid);
  long evaluations = 0;
  const std::vector<Point> grid = grid_phase(spaces, search_objective, cfg, evaluations);
  if (grid.empty() || !std::isfinite(grid.front().value)) {
    throw DomainError("parameter box of " + spec.name + " has no feasible point");
  }

  const std::size_t starts = std::min<std::size_t>(
      grid.size(), mode == SearchMode::GridSimplex ? static_cast<std::size_t>(cfg.multistart_count)
                                                   : std::min<std::size_t>(4, static_cast<std::size_t>(cfg.multistart_count)));
  std::mt19937_64 rng(cfg.rng_seed);
  std::vector<Point> refined;
  refined.push_back(grid.front());
  for (std::size_t i = 0; i < starts; ++i) {
    if (!std::isfinite(grid[i].value)) break;
    refined.push_back(mode == SearchMode::GridSimplex
                          ? simplex_refine(grid[i], spaces, search_objective, cfg, rng, evaluations)
                          : coordinate_refine(grid[i], spaces, search_objective, cfg, evaluations));
  }

  // Re-score every refined point with the full-resolution configuration.
  const QuotientObjective final_objective(family, p, cfg, cfg.coarse_grid);
  for (Point& pt : refined) {
    pt.value = final_objective(spaces[static_cast<std::size_t>(pt.space)].to_params(pt.x));
    ++evaluations;
  }
  const Point best = *std::min_element(refined.begin(), refined.end(), better_point);
  const SearchSpace& space = spaces[static_cast<std::size_t>(best.space)];

  OptimizeResult out;
  out.params = space.to_params(best.x);
  out.fixed_index = space.fixed_index;
  if (spaces.size() > 1) {
    // The simplex may leave the box; restore "largest-magnitude parameter = 1".
    std::size_t big = 0;
    for (std::size_t i = 1; i < out.params.size(); ++i) {
      if (std::abs(out.params[i]) > std::abs(out.params[big])) big = i;
    }
    if (big != static_cast<std::size_t>(out.fixed_index)) {
      const double s = out.params[big];
      for (double& v : out.params) v /= s;
      out.params[big] = 1.0;
      out.fixed_index = static_cast<int>(big);
    }
  }
  out.reference_params = out.params;
  const auto [ref_index, ref_value] = reference_scale(family);
  if (ref_index >= 0 && out.params[static_cast<std::size_t>(ref_index)] != 0.0) {
    const double scale = ref_value / out.params[static_cast<std::size_t>(ref_index)];
    for (double& v : out.reference_params) v *= scale;
  }
  out.report = lower_bound(family, out.params, p, cfg);
  out.mode = mode;
  out.evaluations = evaluations;
  return out;
}

std::vector<SweepPoint> parameter_sweep(FamilyId family, double p, double lo, double hi, double step,
                                        const OptConfig& cfg) {
  cfg.validate();
  if (family != FamilyId::P3 && family != FamilyId::P6 && family != FamilyId::P8 && family != FamilyId::P10) {
    throw DomainError("parameter sweep needs a two-parameter family (P3, P6, P8 or P10)");
  }
  if (!std::isfinite(lo) || !std::isfinite(hi) || !std::isfinite(step) || !(step > 0.0) || hi < lo) {
    throw DomainError("sweep range needs finite lo <= hi and step > 0");
  }
  const double span = (hi - lo) / step;
  if (span > 1e7) throw DomainError("sweep range has too many points");
  const long count = static_cast<long>(std::floor(span + 1e-9)) + 1;

  const double q = hl_exponent(family_spec(family).degree, p);
  const SphereGrid grid = make_sphere_grid(p, cfg.coarse_grid);
  std::vector<SweepPoint> out(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(dynamic, 8)
  for (long i = 0; i < count; ++i) {
    const double lambda = lo + static_cast<double>(i) * step;
    const std::vector<double> params{1.0, lambda};
    const HomoPoly2 poly = build_family(family, params);
    out[static_cast<std::size_t>(i)] = {lambda, coefficient_norm(poly, q) / sup_norm(poly, grid, cfg).value};
  }
  return out;
}

HyperReport hyper_estimate(const HomoPoly2& base, int k, const OptConfig& cfg) {
  if (k < 1) throw DomainError("power must be >= 1");
  if (base.is_zero()) throw DomainError("hyper estimate of the zero polynomial");
  const long long big_m = static_cast<long long>(base.degree()) * k;
  if (big_m > cfg.max_degree) {
    throw CapError("degree " + std::to_string(big_m) + " exceeds the cap " + std::to_string(cfg.max_degree));
  }
  HyperReport r;
  r.base_family = "custom";
  r.base_params.clear();
  r.power = k;
  r.M = static_cast<int>(big_m);
  r.p = 2.0 * r.M;
  const double q = hl_exponent(r.M, r.p);

  HomoPoly2 work = base;
  HomoPoly2 powered = base;
  try {
    powered = polynomial_power(work, k, cfg.max_degree);
  } catch (const OverflowError&) {
    // Scale by a power of two (exact); the quotient is scale invariant.
    double largest = 0.0;
    for (double c : base.coeffs()) largest = std::max(largest, std::abs(c));
    work = base.scaled(std::ldexp(1.0, -std::ilogb(largest)));
    powered = polynomial_power(work, k, cfg.max_degree);
  }
  r.coeff_norm = coefficient_norm(powered, q);
  r.base_sup = sup_norm(work, r.p, cfg).value;
  r.log_lower_bound = std::log(r.coeff_norm) - k * std::log(r.base_sup);
  r.lower_bound = std::exp(r.log_lower_bound);
  if (!std::isfinite(r.lower_bound)) {
    throw OverflowError("lower bound exceeds the double range at power " + std::to_string(k), k);
  }
  r.h_estimate = std::exp(r.log_lower_bound / r.M);
  if (work != base) {
    // Report the sup of the caller's polynomial.
    r.base_sup = sup_norm(base, r.p, cfg).value;
  }
  return r;
}

HyperReport hyper_estimate(FamilyId family, std::span<const double> params, int k, const OptConfig& cfg) {
  HyperReport r = hyper_estimate(build_family(family, params), k, cfg);
  r.base_family = std::string(family_name(family));
  r.base_params.assign(params.begin(), params.end());
  return r;
}

}  // namespace hlb
