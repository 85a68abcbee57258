// Serial vs OpenMP timings for the sphere scan and the expansion convolution.
//
//   bench_kernels [grid_size] [degree] [repeats]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <vector>

#include "hlb/kernels.hpp"
#include "hlb/poly.hpp"

namespace {

template <typename F>
double best_seconds(int repeats, F&& f) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  const int grid = argc > 1 ? std::atoi(argv[1]) : 200001;
  const int degree = argc > 2 ? std::atoi(argv[2]) : 300;
  const int repeats = argc > 3 ? std::atoi(argv[3]) : 5;
  const int threads = hlb::configure_threads_from_env();

  const std::vector<double> params{1.0, -2.2654};
  const hlb::HomoPoly2 p6 = hlb::build_family(hlb::FamilyId::P6, params);
  const hlb::SphereGrid sg = hlb::make_sphere_grid(12.0, grid | 1);
  std::vector<double> out_s(static_cast<std::size_t>(sg.size())), out_p(out_s.size());

  const double scan_s = best_seconds(repeats, [&] { hlb::scan_abs_serial(p6.coeffs(), sg, out_s); });
  const double scan_p = best_seconds(repeats, [&] { hlb::scan_abs_parallel(p6.coeffs(), sg, out_p); });

  std::vector<hlb::Ext> a(static_cast<std::size_t>(degree) + 1);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = hlb::Ext((i % 7 == 0 ? -1.0 : 1.0) / (1.0 + static_cast<double>(i)));
  std::vector<hlb::Ext> conv_s(2 * a.size() - 1), conv_p(conv_s.size());
  const double conv_ser = best_seconds(repeats, [&] { hlb::convolve_serial(a, a, conv_s); });
  const double conv_par = best_seconds(repeats, [&] { hlb::convolve_parallel(a, a, conv_p); });

  bool same = out_s == out_p;
  for (std::size_t i = 0; i < conv_s.size(); ++i) same = same && conv_s[i].limb == conv_p[i].limb;

  std::printf("threads %d\n", threads);
  std::printf("scan      n=%-8d serial %.6f s  parallel %.6f s  speedup %.2f\n", sg.size(), scan_s, scan_p,
              scan_s / scan_p);
  std::printf("convolve  m=%-8d serial %.6f s  parallel %.6f s  speedup %.2f\n", degree, conv_ser, conv_par,
              conv_ser / conv_par);
  std::printf("results identical: %s\n", same ? "yes" : "no");
  return same ? 0 : 1;
}
