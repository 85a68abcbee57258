#pragma once

// Error-free transformations and compensated accumulators.
//
// All routines assume round-to-nearest binary64 arithmetic without
// contraction of a*b+c into fma (the build passes -ffp-contract=off).

#include <cmath>
#include <span>

namespace hlb {

struct TwoTerm {
  double hi;
  double lo;
};

/// hi + lo == a + b exactly, hi == fl(a + b).
inline TwoTerm two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  const double e = (a - (s - bb)) + (b - bb);
  return {s, e};
}

/// As two_sum, valid when |a| >= |b| (or a == 0).
inline TwoTerm fast_two_sum(double a, double b) {
  const double s = a + b;
  return {s, b - (s - a)};
}

namespace detail {

// Veltkamp splitting: a == hi + lo with both halves fitting in 26 bits.
inline TwoTerm split(double a) {
  constexpr double kSplitter = 134217729.0;  // 2^27 + 1
  const double t = kSplitter * a;
  const double hi = t - (t - a);
  return {hi, a - hi};
}

}  // namespace detail

/// hi + lo == a * b exactly (barring underflow), hi == fl(a * b).
inline TwoTerm two_prod(double a, double b) {
  const double p = a * b;
#if defined(__FMA__)
  return {p, std::fma(a, b, -p)};
#else
  const auto [ah, al] = detail::split(a);
  const auto [bh, bl] = detail::split(b);
  const double e = ((ah * bh - p) + ah * bl + al * bh) + al * bl;
  return {p, e};
#endif
}

/// Compensated summation (Ogita-Rump-Oishi Sum2). The result is as accurate
/// as if the sum were computed in twice the working precision, then rounded.
class CompensatedSum {
 public:
  void add(double x) {
    const auto [s, e] = two_sum(sum_, x);
    sum_ = s;
    comp_ += e;
  }

  CompensatedSum& operator+=(double x) {
    add(x);
    return *this;
  }

  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

/// Compensated dot product accumulator (Dot2).
class CompensatedDot {
 public:
  void add_product(double a, double b) {
    const auto [p, pe] = two_prod(a, b);
    const auto [s, se] = two_sum(sum_, p);
    sum_ = s;
    comp_ += pe + se;
  }

  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

inline double compensated_sum(std::span<const double> xs) {
  CompensatedSum acc;
  for (double x : xs) acc.add(x);
  return acc.value();
}

}  // namespace hlb
