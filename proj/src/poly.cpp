#include "hlb/poly.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <limits>

#include "hlb/eft.hpp"
#include "hlb/error.hpp"
#include "hlb/kernels.hpp"

namespace hlb {

HomoPoly2::HomoPoly2(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() < 2) throw DomainError("homogeneous polynomial needs degree >= 1");
  for (double c : coeffs_) {
    if (!std::isfinite(c)) throw DomainError("polynomial coefficient is not finite");
  }
}

HomoPoly2 HomoPoly2::monomial(int degree, int j) {
  if (degree < 1 || j < 0 || j > degree) throw DomainError("bad monomial exponents");
  std::vector<double> c(static_cast<std::size_t>(degree) + 1, 0.0);
  c[static_cast<std::size_t>(j)] = 1.0;
  return HomoPoly2(std::move(c));
}

bool HomoPoly2::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](double c) { return c == 0.0; });
}

HomoPoly2 HomoPoly2::scaled(double c) const {
  std::vector<double> out(coeffs_);
  for (double& v : out) v *= c;
  return HomoPoly2(std::move(out));
}

HomoPoly2 HomoPoly2::reflected() const {
  std::vector<double> out(coeffs_);
  for (std::size_t j = 1; j < out.size(); j += 2) out[j] = -out[j];
  return HomoPoly2(std::move(out));
}

HomoPoly2 HomoPoly2::swapped() const {
  return HomoPoly2(std::vector<double>(coeffs_.rbegin(), coeffs_.rend()));
}

double evaluate(std::span<const double> coeffs, double x, double y) {
  const std::size_t m = coeffs.size() - 1;
  constexpr std::size_t kStack = 64;
  std::array<double, kStack + 1> stack_pows;
  std::vector<double> heap_pows;
  double* ypow = stack_pows.data();
  if (m > kStack) {
    heap_pows.resize(m + 1);
    ypow = heap_pows.data();
  }
  ypow[0] = 1.0;
  for (std::size_t j = 1; j <= m; ++j) ypow[j] = ypow[j - 1] * y;

  CompensatedDot acc;
  double xpow = 1.0;
  for (std::size_t j = m + 1; j-- > 0;) {
    if (coeffs[j] != 0.0) acc.add_product(coeffs[j], xpow * ypow[j]);
    xpow *= x;
  }
  return acc.value();
}

double coefficient_norm(const HomoPoly2& p, double q) {
  if (std::isnan(q) || q < 1.0) throw DomainError("coefficient norm needs q >= 1");
  double largest = 0.0;
  for (double c : p.coeffs()) largest = std::max(largest, std::abs(c));
  if (largest == 0.0 || std::isinf(q)) return largest;

  if (q == 2.0) {
    CompensatedDot acc;
    for (double c : p.coeffs()) {
      const double r = c / largest;
      acc.add_product(r, r);
    }
    return largest * std::sqrt(acc.value());
  }
  CompensatedSum acc;
  for (double c : p.coeffs()) {
    if (c != 0.0) acc.add(std::pow(std::abs(c) / largest, q));
  }
  return largest * std::pow(acc.value(), 1.0 / q);
}

std::vector<Ext> multiply_extended(std::span<const Ext> a, std::span<const Ext> b) {
  std::vector<Ext> out(a.size() + b.size() - 1);
  convolve(a, b, out);
  return out;
}

namespace {

void check_finite(std::span<const Ext> coeffs, int k) {
  for (const Ext& c : coeffs) {
    if (!c.is_finite()) {
      throw OverflowError("coefficient overflow while raising to the power " + std::to_string(k), k);
    }
  }
}

}  // namespace

std::vector<Ext> polynomial_power_extended(std::span<const Ext> coeffs, int k, int max_degree) {
  if (k < 1) throw DomainError("power must be >= 1");
  if (coeffs.size() < 2) throw DomainError("homogeneous polynomial needs degree >= 1");
  const long long degree = static_cast<long long>(coeffs.size() - 1) * k;
  if (degree > max_degree) {
    throw CapError("degree " + std::to_string(degree) + " exceeds the cap " + std::to_string(max_degree));
  }
  std::vector<Ext> base(coeffs.begin(), coeffs.end());
  std::vector<Ext> result;
  for (int rest = k;;) {
    if (rest & 1) {
      result = result.empty() ? base : multiply_extended(result, base);
      check_finite(result, k);
    }
    rest >>= 1;
    if (rest == 0) break;
    base = multiply_extended(base, base);
    check_finite(base, k);
  }
  return result;
}

HomoPoly2 round_to_double(std::span<const Ext> coeffs) {
  std::vector<double> out(coeffs.size());
  for (std::size_t j = 0; j < coeffs.size(); ++j) out[j] = coeffs[j].to_double();
  return HomoPoly2(std::move(out));
}

HomoPoly2 polynomial_power(const HomoPoly2& p, int k, int max_degree) {
  std::vector<Ext> ext;
  ext.reserve(p.coeffs().size());
  for (double c : p.coeffs()) ext.emplace_back(c);
  const auto powered = polynomial_power_extended(ext, k, max_degree);
  for (const Ext& c : powered) {
    if (!std::isfinite(c.to_double())) {
      throw OverflowError("coefficient overflow while raising to the power " + std::to_string(k), k);
    }
  }
  return round_to_double(powered);
}

// ---------------------------------------------------------------------------

namespace {

double leading_value(double v) { return v; }
double leading_value(const Ext& v) { return v.to_double(); }

template <typename T>
std::vector<T> family_coefficients(FamilyId id, std::span<const T> q) {
  using std::sqrt;
  const FamilySpec& spec = family_spec(id);
  if (static_cast<int>(q.size()) != spec.arity()) {
    throw ArityError(spec.name + " takes " + std::to_string(spec.arity()) + " parameter(s), got " +
                     std::to_string(q.size()));
  }
  for (std::size_t i = 0; i < q.size(); ++i) {
    const double v = leading_value(q[i]);
    if (!std::isfinite(v)) throw DomainError(spec.name + ": parameter is not finite");
    if (!spec.param_domain[i].contains(v)) {
      throw DomainError(spec.name + ": parameter " + spec.param_names[i] + " outside its domain");
    }
  }
  const T zero(0.0);
  switch (id) {
    case FamilyId::P2: {
      const T& a = q[0];
      const T one(1.0);
      const T cross = sqrt(a * (one - a));
      return {a, cross + cross, -a};
    }
    case FamilyId::P3:
      return {q[0], q[1], q[1], q[0]};
    case FamilyId::P5:
      return {q[0], -q[1], -q[2], q[2], q[1], -q[0]};
    case FamilyId::P6:
      return {zero, q[0], zero, q[1], zero, q[0], zero};
    case FamilyId::P7:
      return {-q[0], q[1], q[2], -q[3], -q[3], q[2], q[1], -q[0]};
    case FamilyId::P8:
      return {zero, -q[0], zero, q[1], zero, -q[1], zero, q[0], zero};
    case FamilyId::P10:
      return {zero, q[0], zero, q[1], zero, T(1.0), zero, q[1], zero, q[0], zero};
  }
  throw DomainError("unknown family");
}

const std::array<FamilySpec, 7>& family_table() {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  const ParamInterval real{-kInf, kInf};
  static const std::array<FamilySpec, 7> table{{
      {FamilyId::P2, "P2", 2, {"a"}, {ParamInterval{0.0, 1.0, true}}},
      {FamilyId::P3, "P3", 3, {"a", "b"}, {real, real}},
      {FamilyId::P5, "P5", 5, {"a", "b", "c"}, {real, real, real}},
      {FamilyId::P6, "P6", 6, {"a", "b"}, {real, real}},
      {FamilyId::P7, "P7", 7, {"a", "b", "c", "d"}, {real, real, real, real}},
      {FamilyId::P8, "P8", 8, {"a", "b"}, {real, real}},
      {FamilyId::P10, "P10", 10, {"a", "b"}, {real, real}},
  }};
  return table;
}

constexpr std::array<FamilyId, 7> kFamilies{FamilyId::P2, FamilyId::P3, FamilyId::P5, FamilyId::P6,
                                            FamilyId::P7, FamilyId::P8, FamilyId::P10};

}  // namespace

HomoPoly2 FamilySpec::build(std::span<const double> params) const { return build_family(id, params); }

const FamilySpec& family_spec(FamilyId id) {
  for (const FamilySpec& f : family_table()) {
    if (f.id == id) return f;
  }
  throw DomainError("unknown family");
}

std::span<const FamilyId> all_families() { return kFamilies; }

std::string_view family_name(FamilyId id) { return family_spec(id).name; }

FamilyId parse_family(std::string_view name) {
  for (const FamilySpec& f : family_table()) {
    if (f.name == name) return f.id;
  }
  throw DomainError("unknown family '" + std::string(name) + "' (expected P2, P3, P5, P6, P7, P8 or P10)");
}

HomoPoly2 build_family(FamilyId id, std::span<const double> params) {
  return HomoPoly2(family_coefficients<double>(id, params));
}

std::vector<Ext> build_family_extended(FamilyId id, std::span<const Ext> params) {
  return family_coefficients<Ext>(id, params);
}

std::vector<std::string> split_params(std::string_view text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    std::string_view tok = text.substr(start, comma - start);
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.front()))) tok.remove_prefix(1);
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back()))) tok.remove_suffix(1);
    if (tok.empty()) throw DomainError("empty parameter in '" + std::string(text) + "'");
    out.emplace_back(tok);
    start = comma + 1;
  }
  return out;
}

Ext parse_param_extended(std::string_view token) {
  const std::size_t slash = token.find('/');
  if (slash == std::string_view::npos) return parse_decimal_expansion<kLimbs>(token);
  const Ext num = parse_decimal_expansion<kLimbs>(token.substr(0, slash));
  const Ext den = parse_decimal_expansion<kLimbs>(token.substr(slash + 1));
  if (den.is_zero()) throw DomainError("zero denominator in '" + std::string(token) + "'");
  return num / den;
}

double parse_param(std::string_view token) {
  if (token.find('/') != std::string_view::npos) return parse_param_extended(token).to_double();
  // Validate with the exact parser, round with strtod (correctly rounded).
  (void)parse_decimal_expansion<1>(token);
  const std::string s(token);
  return std::strtod(s.c_str(), nullptr);
}

std::vector<double> parse_params(std::string_view text) {
  std::vector<double> out;
  for (const auto& tok : split_params(text)) out.push_back(parse_param(tok));
  return out;
}

std::vector<Ext> parse_params_extended(std::string_view text) {
  std::vector<Ext> out;
  for (const auto& tok : split_params(text)) out.push_back(parse_param_extended(tok));
  return out;
}

}  // namespace hlb
