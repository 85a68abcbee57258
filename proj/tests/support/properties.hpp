#pragma once

// Seeded randomized property checks shared by the unit tests and the
// acceptance binary.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hlb/norm.hpp"
#include "hlb/poly.hpp"

namespace props {

struct Outcome {
  int instances = 0;
  int failures = 0;
  double worst = 0.0;  ///< largest observed violation measure
  std::string first_failure;

  bool ok() const { return instances > 0 && failures == 0; }
  void record(bool pass, double measure, const std::string& what);
};

struct Instance {
  hlb::FamilyId family;
  std::vector<double> params;
  hlb::HomoPoly2 poly;

  std::string describe() const;
};

std::vector<double> random_params(hlb::FamilyId family, std::mt19937_64& rng);
Instance random_instance(std::mt19937_64& rng);

/// sup on l_{2m} <= sup on l_{4m} <= sup on l_inf.
Outcome ball_monotonicity(int n, std::uint64_t seed, const hlb::OptConfig& cfg);
/// lower_bound(cP) == lower_bound(P), 1e-12 relative.
Outcome quotient_scale_invariance(int n, std::uint64_t seed, const hlb::OptConfig& cfg);
/// coeffs[j] -> (-1)^j coeffs[j] leaves sup and lower bound unchanged, 1e-12 relative.
Outcome reflection_invariance(int n, std::uint64_t seed, const hlb::OptConfig& cfg);
/// sup(P^k) == sup(P)^k for P3, P6 and k in {2, 3, 5}, 1e-9 relative.
Outcome power_identity(int n, std::uint64_t seed, const hlb::OptConfig& cfg);
/// Both exponent formulas give 2 at p = 2m and hl_exponent is continuous there.
Outcome exponent_branch_agreement(int n, std::uint64_t seed);
/// sup_norm >= random-search oracle - 1e-12 (coefficients scaled to max 1).
Outcome oracle_domination(int n, std::uint64_t seed, std::int64_t samples, const hlb::OptConfig& cfg);

}  // namespace props
