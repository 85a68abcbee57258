#pragma once

// Bivariate homogeneous polynomials P(x, y) = sum_j c_j x^(m-j) y^j.

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hlb/expansion.hpp"

namespace hlb {

inline constexpr int kDefaultMaxDegree = 2048;

class HomoPoly2 {
 public:
  /// coeffs[j] multiplies x^(m-j) y^j; needs at least two finite entries.
  explicit HomoPoly2(std::vector<double> coeffs);

  /// x^(m-j) y^j
  static HomoPoly2 monomial(int degree, int j = 0);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const double> coeffs() const { return coeffs_; }
  double operator[](int j) const { return coeffs_[static_cast<std::size_t>(j)]; }
  bool is_zero() const;

  HomoPoly2 scaled(double c) const;
  /// P(x, -y)
  HomoPoly2 reflected() const;
  /// P(y, x)
  HomoPoly2 swapped() const;

  friend bool operator==(const HomoPoly2&, const HomoPoly2&) = default;

 private:
  std::vector<double> coeffs_;
};

double evaluate(std::span<const double> coeffs, double x, double y);

/// Compensated evaluation of P at (x, y).
inline double evaluate(const HomoPoly2& p, double x, double y) {
  return evaluate(p.coeffs(), x, y);
}

/// (sum_j |c_j|^q)^(1/q), scaled by the largest coefficient; q may be +inf.
double coefficient_norm(const HomoPoly2& p, double q);

/// P^k by repeated squaring on four-limb expansions, rounded once at the end.
HomoPoly2 polynomial_power(const HomoPoly2& p, int k, int max_degree = kDefaultMaxDegree);

/// P^k without the final rounding, for callers that need every bit.
std::vector<Ext> polynomial_power_extended(std::span<const Ext> coeffs, int k,
                                           int max_degree = kDefaultMaxDegree);

/// Coefficients of (sum a_i x^(m-i) y^i)(sum b_j x^(n-j) y^j).
std::vector<Ext> multiply_extended(std::span<const Ext> a, std::span<const Ext> b);

HomoPoly2 round_to_double(std::span<const Ext> coeffs);

// ---------------------------------------------------------------------------
// Parametrized families

enum class FamilyId { P2, P3, P5, P6, P7, P8, P10 };

struct ParamInterval {
  double lo;
  double hi;
  bool open = false;

  bool contains(double v) const { return open ? (v > lo && v < hi) : (v >= lo && v <= hi); }
};

struct FamilySpec {
  FamilyId id;
  std::string name;
  int degree;
  std::vector<std::string> param_names;
  std::vector<ParamInterval> param_domain;

  int arity() const { return static_cast<int>(param_names.size()); }
  HomoPoly2 build(std::span<const double> params) const;
};

const FamilySpec& family_spec(FamilyId id);
std::span<const FamilyId> all_families();
std::string_view family_name(FamilyId id);
FamilyId parse_family(std::string_view name);

/// The coefficient pattern of each family; the two signs of P2 are fixed to +.
HomoPoly2 build_family(FamilyId id, std::span<const double> params);
std::vector<Ext> build_family_extended(FamilyId id, std::span<const Ext> params);

/// Splits "a,b,c" into trimmed tokens.
std::vector<std::string> split_params(std::string_view text);

/// A decimal literal or a ratio "n/d" of decimal literals.
double parse_param(std::string_view token);
Ext parse_param_extended(std::string_view token);

std::vector<double> parse_params(std::string_view text);
std::vector<Ext> parse_params_extended(std::string_view text);

}  // namespace hlb
