#pragma once

// Fixed-length floating-point expansions.
//
// An Expansion<N> is an unevaluated sum of N nonoverlapping doubles stored in
// decreasing magnitude (trailing limbs may be zero). Arithmetic goes through
// ExpansionAccumulator, which keeps an exact Shewchuk expansion of everything
// added to it and truncates only when its buffer fills, keeping the N + 2
// largest compressed components. Relative accuracy is about 2^(-53 N).

#include <array>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <string>
#include <string_view>

#include "hlb/eft.hpp"
#include "hlb/error.hpp"

namespace hlb {

template <int N>
struct Expansion {
  static_assert(N >= 1);
  std::array<double, N> limb{};

  Expansion() = default;
  explicit Expansion(double x) { limb[0] = x; }

  double leading() const { return limb[0]; }
  bool is_zero() const { return limb[0] == 0.0; }
  bool is_finite() const { return std::isfinite(limb[0]); }

  /// Faithful rounding of the exact limb sum.
  double to_double() const {
    double s = limb[N - 1];
    for (int i = N - 2; i >= 0; --i) s = limb[i] + s;
    return s;
  }

  Expansion operator-() const {
    Expansion r;
    for (int i = 0; i < N; ++i) r.limb[i] = -limb[i];
    return r;
  }
};

template <int N>
class ExpansionAccumulator {
 public:
  static constexpr int kKeep = N + 2;
  static constexpr int kCap = N + 6;

  void add(double b) {
    if (b == 0.0) return;
    if (n_ == kCap) compress(kKeep);
    // GROW-EXPANSION with zero elimination; e_ stays increasing in magnitude.
    double q = b;
    int k = 0;
    for (int i = 0; i < n_; ++i) {
      const auto [s, err] = two_sum(q, e_[i]);
      q = s;
      if (err != 0.0) e_[k++] = err;
    }
    if (q != 0.0) e_[k++] = q;
    n_ = k;
  }

  void add_product(double a, double b) {
    const auto [hi, lo] = two_prod(a, b);
    add(hi);
    add(lo);
  }

  template <int M>
  void add(const Expansion<M>& x) {
    for (int i = M - 1; i >= 0; --i) add(x.limb[i]);
  }

  template <int M>
  void add_scaled(const Expansion<M>& x, double s) {
    for (int i = M - 1; i >= 0; --i) {
      if (x.limb[i] != 0.0) add_product(x.limb[i], s);
    }
  }

  Expansion<N> result() {
    compress(N);
    Expansion<N> r;
    for (int i = 0; i < n_; ++i) r.limb[i] = e_[n_ - 1 - i];
    return r;
  }

 private:
  // Shewchuk's COMPRESS, then drop all but the `keep` largest components.
  void compress(int keep) {
    if (n_ == 0) return;
    std::array<double, kCap> g{};
    int bottom = n_ - 1;
    double big = e_[n_ - 1];
    for (int i = n_ - 2; i >= 0; --i) {
      const auto [s, q] = fast_two_sum(big, e_[i]);
      if (q != 0.0) {
        g[bottom--] = s;
        big = q;
      } else {
        big = s;
      }
    }
    g[bottom] = big;
    int top = 0;
    std::array<double, kCap> h{};
    for (int i = bottom + 1; i < n_; ++i) {
      const auto [s, q] = fast_two_sum(g[i], big);
      if (q != 0.0) h[top++] = q;
      big = s;
    }
    if (big != 0.0 || top == 0) h[top++] = big;
    const int drop = top > keep ? top - keep : 0;
    n_ = 0;
    for (int i = drop; i < top; ++i) {
      if (h[i] != 0.0) e_[n_++] = h[i];
    }
  }

  std::array<double, kCap> e_{};
  int n_ = 0;
};

template <int N>
Expansion<N> operator+(const Expansion<N>& a, const Expansion<N>& b) {
  ExpansionAccumulator<N> acc;
  acc.add(a);
  acc.add(b);
  return acc.result();
}

template <int N>
Expansion<N> operator-(const Expansion<N>& a, const Expansion<N>& b) {
  return a + (-b);
}

template <int N>
Expansion<N> operator*(const Expansion<N>& a, const Expansion<N>& b) {
  ExpansionAccumulator<N> acc;
  // Products a_r b_s with r + s >= N sit below the retained precision.
  for (int r = N - 1; r >= 0; --r) {
    for (int s = N - 1 - r; s >= 0; --s) {
      if (a.limb[r] != 0.0 && b.limb[s] != 0.0) acc.add_product(a.limb[r], b.limb[s]);
    }
  }
  return acc.result();
}

template <int N>
Expansion<N> operator*(const Expansion<N>& a, double s) {
  ExpansionAccumulator<N> acc;
  acc.add_scaled(a, s);
  return acc.result();
}

/// Long division: each step removes about 52 bits of the remainder exactly.
template <int N>
Expansion<N> operator/(const Expansion<N>& a, const Expansion<N>& b) {
  if (b.is_zero()) throw DomainError("expansion division by zero");
  ExpansionAccumulator<N + 2> rem;
  rem.add(a);
  ExpansionAccumulator<N> quot;
  for (int i = 0; i <= N; ++i) {
    const double q = rem.result().leading() / b.leading();
    if (q == 0.0) break;
    quot.add(q);
    rem.add_scaled(b, -q);
  }
  return quot.result();
}

template <int N>
Expansion<N> abs(const Expansion<N>& a) {
  return a.leading() < 0.0 ? -a : a;
}

/// Newton iteration x <- x + (a - x^2) / (2x), doubling the correct bits.
template <int N>
Expansion<N> sqrt(const Expansion<N>& a) {
  if (a.leading() < 0.0) throw DomainError("square root of a negative expansion");
  if (a.is_zero()) return a;
  Expansion<N> x(std::sqrt(a.leading()));
  for (int bits = 53; bits < 53 * N + 53; bits *= 2) {
    x = x + (a - x * x) / (x * 2.0);
  }
  return x;
}

/// Parses a decimal literal ("-2.2654", "1e-3", "+0.5") exactly up to the
/// expansion's precision.
template <int N>
Expansion<N> parse_decimal_expansion(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  ExpansionAccumulator<N + 2> mantissa;
  Expansion<N + 2> value;
  int frac_digits = 0;
  int digits = 0;
  bool seen_point = false;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '.' && !seen_point) {
      seen_point = true;
      continue;
    }
    if (c < '0' || c > '9') break;
    mantissa = {};
    mantissa.add_scaled(value, 10.0);
    mantissa.add(static_cast<double>(c - '0'));
    value = mantissa.result();
    ++digits;
    if (seen_point) ++frac_digits;
  }
  if (digits == 0) throw DomainError("malformed decimal: '" + std::string(text) + "'");
  int exponent = 0;
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    bool exp_negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      exp_negative = text[i] == '-';
      ++i;
    }
    int exp_digits = 0;
    for (; i < text.size() && text[i] >= '0' && text[i] <= '9'; ++i) {
      exponent = exponent * 10 + (text[i] - '0');
      if (exponent > 400) throw DomainError("decimal exponent out of range");
      ++exp_digits;
    }
    if (exp_digits == 0) throw DomainError("malformed decimal exponent: '" + std::string(text) + "'");
    if (exp_negative) exponent = -exponent;
  }
  if (i != text.size()) throw DomainError("malformed decimal: '" + std::string(text) + "'");
  exponent -= frac_digits;

  ExpansionAccumulator<N> narrow;
  narrow.add(value);
  Expansion<N> result = narrow.result();
  if (exponent != 0) {
    Expansion<N> scale(1.0);
    const Expansion<N> ten(10.0);
    for (int k = 0; k < std::abs(exponent); ++k) scale = scale * ten;
    result = exponent > 0 ? result * scale : result / scale;
  }
  return negative ? -result : result;
}

inline constexpr int kLimbs = 4;
using Ext = Expansion<kLimbs>;

}  // namespace hlb
