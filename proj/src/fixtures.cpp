#include "hlb/fixtures.hpp"

#include <array>

#include "hlb/error.hpp"

namespace hlb {

namespace {

FixtureRow row(FamilyId family, std::string params, std::string norm, std::string value, std::string floor_base,
               int floor_exponent) {
  FixtureRow r;
  r.family = family;
  r.params = std::move(params);
  r.norm = std::move(norm);
  r.value = std::move(value);
  r.floor_base = std::move(floor_base);
  r.floor_exponent = floor_exponent;
  r.floor_exponent_used = floor_exponent;
  return r;
}

FixtureRow hyper_row(FamilyId family, int power, std::string params, std::string value) {
  FixtureRow r;
  r.family = family;
  r.power = power;
  r.params = std::move(params);
  r.value = std::move(value);
  return r;
}

TableFixture make_s2() {
  TableFixture t{TableId::S2, "s2", "Norms and lower bounds with the literature parameters, p = 2m", {}, {}};
  t.rows = {
      row(FamilyId::P2, "0.867835", "0.991227730027263", "1.414213562373095", "1.18", 2),
      row(FamilyId::P3, "1,-1.6692", "1.336725475130557", "2.058620016006847", "1.27", 3),
      row(FamilyId::P5, "0.19462,0.66008,0.97833", "0.286160496407654", "5.911278874557850", "1.42", 5),
      row(FamilyId::P6, "1,-2.2654", "0.265449175431079", "10.06063557813303", "1.46", 6),
      row(FamilyId::P7, "0.05126,0.22070,0.50537,0.71044", "0.071365688615534", "17.850856996050050", "1.50", 7),
      row(FamilyId::P8, "0.15258,0.64697", "0.029851212141614", "31.491320225749660", "1.53", 9),
      row(FamilyId::P10, "0.0938,-0.5938", "0.015289940437748", "85.844178992096431", "1.56", 10),
  };
  FixtureRow& p8 = t.rows[5];
  p8.floor_exponent_used = 8;
  p8.annotation = "printed floor (1.53)^9 does not match degree 8; compared against (1.53)^8";
  return t;
}

TableFixture make_s3() {
  TableFixture t{TableId::S3, "s3", "Improved parameters, p = 2m", {}, {}};
  t.rows = {
      row(FamilyId::P2, "0.867835", "0.991227730027263", "1.414213562373095", "", 0),
      row(FamilyId::P3, "1,-2", "1.414213", "2.236067", "1.30", 3),
      row(FamilyId::P5, "0.104245,0.333366,0.541712", "0.147219", "6.191704", "1.44", 5),
      row(FamilyId::P6, "1,-2.363681", "0.258967", "10.636287", "1.48", 6),
      row(FamilyId::P7, "0.0555555,0.2444444,0.5555555,0.8000000", "0.078601", "18.095148", "1.51", 7),
      row(FamilyId::P8, "0.210344,0.896551", "0.041048", "31.727174", "1.54", 8),
      row(FamilyId::P10, "0.085714,-0.577551", "0.014151", "91.640152", "1.57", 10),
  };
  t.rows[2].floor_claim_false = true;
  t.rows[2].annotation = "printed floor 6.191704 > (1.44)^5 is false: (1.44)^5 = 6.1917364";
  t.rows[4].compute_params = "1/18,11/45,5/9,4/5";
  t.rows[4].annotation = "printed parameters are roundings of 1/18, 11/45, 5/9, 4/5";
  t.rows[5].compute_params = "61/290,26/29";
  t.rows[5].annotation = "printed parameters are roundings of 61/290, 26/29";
  t.rows[6].compute_params = "3/35,-283/490";
  t.rows[6].annotation = "printed parameters are roundings of 3/35, -283/490";
  return t;
}

TableFixture make_s4a() {
  TableFixture t{TableId::S4a, "s4a", "Degree 600 estimates with the improved parameters", {}, {}};
  t.rows = {
      hyper_row(FamilyId::P3, 200, "1,-2", "1.288250"),
      hyper_row(FamilyId::P5, 120, "0.104245,0.333366,0.541712", "1.457854"),
      hyper_row(FamilyId::P6, 100, "1,-2.363681", "1.509926"),
      hyper_row(FamilyId::P8, 75, "0.191919,0.8181818", "1.637228"),
      hyper_row(FamilyId::P10, 60, "0.085714,-0.577551", "1.638615"),
  };
  t.rows[3].compute_params = "61/290,26/29";
  t.rows[3].annotation =
      "printed pair differs from the improved P8 parameters the heading refers to; computed with 61/290, 26/29";
  t.rows[4].compute_params = "3/35,-283/490";
  t.rows[4].annotation = "printed parameters are roundings of 3/35, -283/490";
  return t;
}

TableFixture make_s4b() {
  TableFixture t{TableId::S4b, "s4b", "Degree 600 estimates with the literature parameters", {}, {}};
  t.rows = {
      hyper_row(FamilyId::P3, 200, "1,-1.6692", "1.422344"),
      hyper_row(FamilyId::P5, 120, "0.19462,0.66008,0.97833", "1.549722"),
      hyper_row(FamilyId::P6, 100, "1,-2.2654", "1.584313"),
      hyper_row(FamilyId::P8, 75, "0.15258,0.64697", "1.640430"),
      hyper_row(FamilyId::P10, 60, "0.0938,-0.5938", "1.651703"),
  };
  return t;
}

TableFixture make_s4c() {
  TableFixture t{TableId::S4c, "s4c", "Degree 600 estimates with slightly better parameters", {}, {}};
  t.rows = {
      hyper_row(FamilyId::P3, 200, "1,-1.67053", "1.422433"),
      hyper_row(FamilyId::P5, 120, "0.19462,0.66,0.97833", "1.549744"),
      hyper_row(FamilyId::P6, 100, "1,-2.2663", "1.584430"),
      hyper_row(FamilyId::P8, 75, "0.15258,0.64698", "1.640436"),
      hyper_row(FamilyId::P10, 60, "0.0938,-0.5934", "1.65362"),
  };
  return t;
}

constexpr std::array<TableId, 5> kTables{TableId::S2, TableId::S3, TableId::S4a, TableId::S4b, TableId::S4c};

}  // namespace

const TableFixture& table_fixture(TableId id) {
  static const std::array<TableFixture, 5> tables{make_s2(), make_s3(), make_s4a(), make_s4b(), make_s4c()};
  return tables[static_cast<std::size_t>(id)];
}

std::span<const TableId> all_tables() { return kTables; }

TableId parse_table_id(std::string_view name) {
  for (TableId id : kTables) {
    if (table_fixture(id).name == name) return id;
  }
  throw DomainError("unknown table '" + std::string(name) + "' (s2, s3, s4a, s4b, s4c)");
}

}  // namespace hlb
