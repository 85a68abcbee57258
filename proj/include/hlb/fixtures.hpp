#pragma once

// Golden tables as printed in the source tables. Values are stored verbatim
// as strings and never recomputed in place.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hlb/poly.hpp"

namespace hlb {

enum class TableId { S2, S3, S4a, S4b, S4c };

struct FixtureRow {
  FamilyId family;
  std::string params;  ///< printed parameters, comma separated
  /// Parameters used for the computation when they differ from the printed
  /// ones (exact rationals behind rounded decimals); empty = use `params`.
  std::string compute_params;
  int power = 0;  ///< k of (P)^k; 0 for the single-polynomial tables
  std::string norm;  ///< printed sup norm; empty when the table has none
  std::string value;  ///< printed lower bound (s2, s3) or H estimate (s4*)
  std::string floor_base;  ///< printed "(base)^exp" floor; empty when absent
  int floor_exponent = 0;  ///< exponent as printed
  int floor_exponent_used = 0;  ///< exponent compared against (the degree)
  bool floor_claim_false = false;  ///< the printed inequality itself does not hold
  std::string annotation;

  const std::string& effective_params() const { return compute_params.empty() ? params : compute_params; }
};

struct Tolerances {
  double norm_abs = 1e-6;
  double bound_rel = 1e-5;
  double h_abs = 1e-4;
};

struct TableFixture {
  TableId id;
  std::string name;  ///< s2, s3, s4a, s4b, s4c
  std::string title;
  std::vector<FixtureRow> rows;
  Tolerances tol;

  bool is_hyper() const { return id == TableId::S4a || id == TableId::S4b || id == TableId::S4c; }
};

const TableFixture& table_fixture(TableId id);
std::span<const TableId> all_tables();
TableId parse_table_id(std::string_view name);

}  // namespace hlb
