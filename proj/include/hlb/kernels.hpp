#pragma once

// Data-parallel inner loops. Each kernel has a serial reference version and
// an OpenMP version; both compute every output element with identical code,
// so their results are bitwise equal for any thread count.

#include <span>
#include <vector>

#include "hlb/expansion.hpp"

namespace hlb {

/// (1 - |t|^p)^(1/p), evaluated in the log domain so that large p stays
/// accurate near |t| = 1. p = +inf gives 1.
double sphere_complement(double t, double p);

/// Sample nodes t_i = -1 + 2i/(n-1) of one sphere chart and the matching
/// complementary coordinate g_i = sphere_complement(t_i, p).
struct SphereGrid {
  double p = 2.0;
  std::vector<double> t;
  std::vector<double> g;

  int size() const { return static_cast<int>(t.size()); }
};

SphereGrid make_sphere_grid(double p, int n);

/// out[i] = |sum_j c_j t_i^(m-j) g_i^j|
void scan_abs_serial(std::span<const double> coeffs, const SphereGrid& grid, std::span<double> out);
void scan_abs_parallel(std::span<const double> coeffs, const SphereGrid& grid, std::span<double> out);
void scan_abs(std::span<const double> coeffs, const SphereGrid& grid, std::span<double> out);

/// out = a * b as polynomial coefficient vectors; out.size() == a.size() + b.size() - 1.
void convolve_serial(std::span<const Ext> a, std::span<const Ext> b, std::span<Ext> out);
void convolve_parallel(std::span<const Ext> a, std::span<const Ext> b, std::span<Ext> out);
void convolve(std::span<const Ext> a, std::span<const Ext> b, std::span<Ext> out);

/// Applies HLB_THREADS (0 or unset = runtime default). Returns the cap in use.
int configure_threads_from_env();
int max_threads();

}  // namespace hlb
