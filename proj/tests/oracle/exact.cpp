#include "oracle/exact.hpp"

#include <mpfr.h>

#include <cmath>
#include <stdexcept>
#include <string>

namespace oracle {

mpq_class parse_exact(std::string_view token) {
  std::string s(token);
  if (s.find('/') != std::string::npos) {
    mpq_class q(s, 10);
    q.canonicalize();
    return q;
  }
  bool negative = false;
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) negative = s[i++] == '-';
  std::string digits;
  int frac = 0;
  bool dot = false;
  for (; i < s.size(); ++i) {
    if (s[i] == '.') {
      if (dot) throw std::invalid_argument("two decimal points in " + s);
      dot = true;
    } else if (s[i] >= '0' && s[i] <= '9') {
      digits += s[i];
      if (dot) ++frac;
    } else {
      throw std::invalid_argument("not a decimal: " + s);
    }
  }
  if (digits.empty()) throw std::invalid_argument("not a decimal: " + s);
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, static_cast<unsigned long>(frac));
  mpq_class q(mpz_class(digits, 10), den);
  q.canonicalize();
  return negative ? mpq_class(-q) : q;
}

std::vector<mpq_class> parse_exact_list(std::string_view text) {
  std::vector<mpq_class> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto end = comma == std::string_view::npos ? text.size() : comma;
    out.push_back(parse_exact(text.substr(start, end - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

namespace {

// Exact square root of a nonnegative rational square.
mpq_class exact_sqrt(const mpq_class& v) {
  mpz_class n = v.get_num(), d = v.get_den(), rn, rd;
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) {
    throw std::invalid_argument("a(1-a) is not a rational square");
  }
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  return mpq_class(rn, rd);
}

}  // namespace

std::vector<mpq_class> family_coefficients(hlb::FamilyId id, const std::vector<mpq_class>& p) {
  using hlb::FamilyId;
  const mpq_class z(0);
  switch (id) {
    case FamilyId::P2:
      return {p[0], 2 * exact_sqrt(p[0] * (1 - p[0])), -p[0]};
    case FamilyId::P3:
      return {p[0], p[1], p[1], p[0]};
    case FamilyId::P5:
      return {p[0], -p[1], -p[2], p[2], p[1], -p[0]};
    case FamilyId::P6:
      return {z, p[0], z, p[1], z, p[0], z};
    case FamilyId::P7:
      return {-p[0], p[1], p[2], -p[3], -p[3], p[2], p[1], -p[0]};
    case FamilyId::P8:
      return {z, -p[0], z, p[1], z, -p[1], z, p[0], z};
    case FamilyId::P10:
      return {z, p[0], z, p[1], z, mpq_class(1), z, p[1], z, p[0], z};
  }
  throw std::invalid_argument("unknown family");
}

std::vector<mpz_class> multiply(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
  std::vector<mpz_class> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

std::vector<mpz_class> power_sequential(const std::vector<mpz_class>& base, int k) {
  std::vector<mpz_class> out = base;
  for (int i = 1; i < k; ++i) out = multiply(out, base);
  return out;
}

Scaled common_denominator(const std::vector<mpq_class>& coeffs) {
  Scaled s;
  s.den = 1;
  for (const auto& c : coeffs) mpz_lcm(s.den.get_mpz_t(), s.den.get_mpz_t(), c.get_den_mpz_t());
  for (const auto& c : coeffs) s.num.push_back(c.get_num() * (s.den / c.get_den()));
  return s;
}

std::vector<mpq_class> power_exact(const std::vector<mpq_class>& coeffs, int k) {
  const Scaled s = common_denominator(coeffs);
  const std::vector<mpz_class> num = power_sequential(s.num, k);
  mpz_class den;
  mpz_pow_ui(den.get_mpz_t(), s.den.get_mpz_t(), static_cast<unsigned long>(k));
  std::vector<mpq_class> out;
  out.reserve(num.size());
  for (const auto& n : num) {
    mpq_class q(n, den);
    q.canonicalize();
    out.push_back(q);
  }
  return out;
}

mpq_class exact_value(const hlb::Ext& e) {
  mpq_class sum(0);
  for (double limb : e.limb) sum += mpq_class(limb);
  return sum;
}

double relative_error(double computed, const mpq_class& exact) {
  if (exact == 0) return computed == 0.0 ? 0.0 : INFINITY;
  const mpq_class diff = mpq_class(computed) - exact;
  return std::abs(mpq_class(diff / exact).get_d());
}

namespace {

struct Mp {
  mpfr_t v;
  Mp() { mpfr_init2(v, 256); }
  ~Mp() { mpfr_clear(v); }
  Mp(const Mp&) = delete;
  Mp& operator=(const Mp&) = delete;
};

}  // namespace

double sphere_complement_reference(double t, double p) {
  Mp a, b;
  mpfr_set_d(a.v, std::abs(t), MPFR_RNDN);
  mpfr_set_d(b.v, p, MPFR_RNDN);
  mpfr_pow(a.v, a.v, b.v, MPFR_RNDN);
  mpfr_ui_sub(a.v, 1, a.v, MPFR_RNDN);
  if (mpfr_sgn(a.v) <= 0) return 0.0;
  mpfr_ui_div(b.v, 1, b.v, MPFR_RNDN);
  mpfr_pow(a.v, a.v, b.v, MPFR_RNDN);
  return mpfr_get_d(a.v, MPFR_RNDN);
}

double sphere_residual(double x, double y, double p) {
  Mp a, b, e;
  mpfr_set_d(e.v, p, MPFR_RNDN);
  mpfr_set_d(a.v, std::abs(x), MPFR_RNDN);
  mpfr_pow(a.v, a.v, e.v, MPFR_RNDN);
  mpfr_set_d(b.v, std::abs(y), MPFR_RNDN);
  mpfr_pow(b.v, b.v, e.v, MPFR_RNDN);
  mpfr_add(a.v, a.v, b.v, MPFR_RNDN);
  mpfr_sub_ui(a.v, a.v, 1, MPFR_RNDN);
  return mpfr_get_d(a.v, MPFR_RNDN);
}

}  // namespace oracle

namespace oracle {

PowerCheck check_integer_power(hlb::FamilyId id, std::string_view params, int k) {
  const Scaled s = common_denominator(family_coefficients(id, parse_exact_list(params)));
  std::vector<hlb::Ext> base;
  for (const auto& n : s.num) {
    if (!n.fits_slong_p() || std::abs(n.get_si()) > (1L << 53)) throw std::invalid_argument("scaled input too large");
    base.emplace_back(static_cast<double>(n.get_si()));
  }
  const std::vector<hlb::Ext> got = hlb::polynomial_power_extended(base, k);
  const std::vector<mpz_class> want = power_sequential(s.num, k);
  PowerCheck out;
  if (got.size() != want.size()) {
    out.exact = false;
    return out;
  }
  for (std::size_t j = 0; j < want.size(); ++j) {
    const mpq_class g = exact_value(got[j]);
    if (g != mpq_class(want[j])) out.exact = false;
    if (want[j] != 0) {
      ++out.nonzero;
      out.worst_rel = std::max(out.worst_rel, std::abs(mpq_class((g - want[j]) / want[j]).get_d()));
    } else if (g != 0) {
      ++out.zero_mismatches;
    }
  }
  return out;
}

PowerCheck check_decimal_power(hlb::FamilyId id, std::string_view params, int k) {
  const std::vector<hlb::Ext> base = hlb::build_family_extended(id, hlb::parse_params_extended(params));
  const hlb::HomoPoly2 got = hlb::round_to_double(hlb::polynomial_power_extended(base, k));
  const std::vector<mpq_class> want = power_exact(family_coefficients(id, parse_exact_list(params)), k);
  PowerCheck out;
  out.exact = false;
  for (std::size_t j = 0; j < want.size(); ++j) {
    const double g = got[static_cast<int>(j)];
    if (want[j] != 0) {
      ++out.nonzero;
      out.worst_rel = std::max(out.worst_rel, relative_error(g, want[j]));
    } else if (g != 0.0) {
      ++out.zero_mismatches;
    }
  }
  return out;
}

}  // namespace oracle
