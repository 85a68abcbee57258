#include "hlb/kernels.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "hlb/error.hpp"
#include "hlb/poly.hpp"

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace hlb {

namespace {

// Below these sizes thread start-up costs more than the loop.
constexpr int kParallelScanMin = 4096;
constexpr std::size_t kParallelConvolveMin = 64;

inline Ext convolve_entry(std::span<const Ext> a, std::span<const Ext> b, std::size_t j, bool square) {
  ExpansionAccumulator<kLimbs> acc;
  const std::size_t lo = j >= b.size() ? j - b.size() + 1 : 0;
  const std::size_t hi = std::min(j, a.size() - 1);
  auto add_pair = [&acc](const Ext& x, const Ext& y, double scale) {
    for (int r = 0; r < kLimbs && x.limb[r] != 0.0; ++r) {
      const double xr = x.limb[r] * scale;
      for (int s = 0; s < kLimbs - r && y.limb[s] != 0.0; ++s) acc.add_product(xr, y.limb[s]);
    }
  };
  if (square) {
    // a_i a_(j-i) appears twice off the diagonal; doubling is exact.
    for (std::size_t i = lo; i <= hi && i < j - i; ++i) add_pair(a[i], a[j - i], 2.0);
    if (j % 2 == 0 && j / 2 >= lo && j / 2 <= hi) add_pair(a[j / 2], a[j / 2], 1.0);
  } else {
    for (std::size_t i = lo; i <= hi; ++i) add_pair(a[i], b[j - i], 1.0);
  }
  return acc.result();
}

void check_convolve_shapes(std::span<const Ext> a, std::span<const Ext> b, std::span<Ext> out) {
  if (a.empty() || b.empty() || out.size() != a.size() + b.size() - 1) {
    throw DomainError("convolve: output size must be a.size() + b.size() - 1");
  }
}

}  // namespace

double sphere_complement(double t, double p) {
  const double at = std::abs(t);
  if (std::isinf(p)) return 1.0;
  if (at >= 1.0) return 0.0;
  if (p == 1.0) return 1.0 - at;
  if (p == 2.0) return std::sqrt((1.0 - at) * (1.0 + at));
  if (at == 0.0) return 1.0;
  const double log_tp = p * std::log(at);
  // |t|^p below e^-700: 1 - |t|^p/p rounds to 1.
  if (log_tp < -700.0) return 1.0;
  return std::exp(std::log1p(-std::exp(log_tp)) / p);
}

SphereGrid make_sphere_grid(double p, int n) {
  if (n < 3 || n % 2 == 0) throw DomainError("sphere grid needs an odd size >= 3");
  if (!(p >= 1.0)) throw DomainError("sphere grid needs p >= 1");
  SphereGrid grid;
  grid.p = p;
  grid.t.resize(static_cast<std::size_t>(n));
  grid.g.resize(static_cast<std::size_t>(n));
  const double denom = n - 1;
  for (int i = 0; i < n; ++i) {
    // Symmetric construction keeps t(-i) == -t(i) bitwise and t_mid == 0.
    const int k = 2 * i - (n - 1);
    const double t = k / denom;
    grid.t[static_cast<std::size_t>(i)] = t;
    grid.g[static_cast<std::size_t>(i)] = sphere_complement(t, p);
  }
  return grid;
}

void scan_abs_serial(std::span<const double> coeffs, const SphereGrid& grid, std::span<double> out) {
  const int n = grid.size();
  for (int i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i)] =
        std::abs(evaluate(coeffs, grid.t[static_cast<std::size_t>(i)], grid.g[static_cast<std::size_t>(i)]));
  }
}

void scan_abs_parallel(std::span<const double> coeffs, const SphereGrid& grid, std::span<double> out) {
  const int n = grid.size();
#pragma omp parallel for schedule(static)
  for (int i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i)] =
        std::abs(evaluate(coeffs, grid.t[static_cast<std::size_t>(i)], grid.g[static_cast<std::size_t>(i)]));
  }
}

void scan_abs(std::span<const double> coeffs, const SphereGrid& grid, std::span<double> out) {
  if (grid.size() >= kParallelScanMin && max_threads() > 1) {
    scan_abs_parallel(coeffs, grid, out);
  } else {
    scan_abs_serial(coeffs, grid, out);
  }
}

void convolve_serial(std::span<const Ext> a, std::span<const Ext> b, std::span<Ext> out) {
  check_convolve_shapes(a, b, out);
  const bool square = a.data() == b.data() && a.size() == b.size();
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = convolve_entry(a, b, j, square);
}

void convolve_parallel(std::span<const Ext> a, std::span<const Ext> b, std::span<Ext> out) {
  check_convolve_shapes(a, b, out);
  const bool square = a.data() == b.data() && a.size() == b.size();
  const long long n = static_cast<long long>(out.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (long long j = 0; j < n; ++j) {
    out[static_cast<std::size_t>(j)] = convolve_entry(a, b, static_cast<std::size_t>(j), square);
  }
}

void convolve(std::span<const Ext> a, std::span<const Ext> b, std::span<Ext> out) {
  if (out.size() >= kParallelConvolveMin && max_threads() > 1) {
    convolve_parallel(a, b, out);
  } else {
    convolve_serial(a, b, out);
  }
}

int configure_threads_from_env() {
  const char* env = std::getenv("HLB_THREADS");
  if (env != nullptr && *env != '\0') {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || n < 0) {
      throw DomainError("HLB_THREADS must be a non-negative integer, got '" + std::string(env) + "'");
    }
#if defined(_OPENMP)
    if (n > 0) omp_set_num_threads(static_cast<int>(n));
#endif
  }
  return max_threads();
}

int max_threads() {
#if defined(_OPENMP)
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace hlb
