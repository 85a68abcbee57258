#include <cmath>
#include <limits>
#include <sstream>

#include "doctest.h"
#include "hlb/error.hpp"
#include "hlb/report.hpp"

using namespace hlb;

TEST_CASE("config stream") {
  OptConfig cfg;
  std::istringstream in(
      "# comment line\n"
      "coarse_grid = 4001\n"
      "  local_tol=1e-12   # trailing comment\n"
      "\n"
      "rng_seed = 18446744073709551615\n");
  apply_config_stream(cfg, in);
  CHECK(cfg.coarse_grid == 4001);
  CHECK(cfg.local_tol == 1e-12);
  CHECK(cfg.rng_seed == 18446744073709551615ULL);
  CHECK(cfg.max_refine_iters == 200);

  OptConfig bad;
  std::istringstream unknown("grid = 5\n");
  CHECK_THROWS_AS(apply_config_stream(bad, unknown), DomainError);
  std::istringstream junk("coarse_grid = 5x\n");
  CHECK_THROWS_AS(apply_config_stream(bad, junk), DomainError);
  std::istringstream even("coarse_grid = 100\n");
  CHECK_THROWS_AS(apply_config_stream(bad, even), DomainError);
  std::istringstream noeq("coarse_grid 5\n");
  CHECK_THROWS_AS(apply_config_stream(bad, noeq), DomainError);
  CHECK_THROWS_AS(apply_config_file(bad, "/nonexistent/hlb.conf"), DomainError);
}

TEST_CASE("config echo lists every key in a fixed order") {
  const auto entries = config_entries(OptConfig{});
  REQUIRE(entries.size() == 9);
  CHECK(entries[0].first == "coarse_grid");
  CHECK(entries[0].second == "20001");
  CHECK(entries[1].second == "1e-13");
  for (const auto& [k, v] : entries) {
    OptConfig cfg;
    CHECK_NOTHROW(apply_config_entry(cfg, k, v));
  }
}

TEST_CASE("number formatting") {
  CHECK(format_number(0.991227730027263) == "0.991227730027263");
  CHECK(format_number(1.0 / 3.0) == "0.333333333333333");
  CHECK(format_number(std::numeric_limits<double>::infinity()) == "inf");
  CHECK(format_number(-std::numeric_limits<double>::infinity()) == "-inf");
  CHECK(format_params({1.0, -2.2654}) == "1,-2.2654");
}

namespace {

Document sample() {
  Document d;
  d.command = "hlb test --x \"y\"";
  d.config = config_entries(OptConfig{});
  d.columns = {"name", "count", "value", "note"};
  d.rows.push_back({std::string("P3"), 7LL, 1.0 / 3.0, std::string("a,b \"quoted\" | pipe")});
  d.rows.push_back({std::string("P10"), -2LL, std::numeric_limits<double>::infinity(), std::string("")});
  d.rows.push_back({std::string("P6"), 0LL, 2.0, std::string("x")});
  return d;
}

}  // namespace

TEST_CASE("json round trip is byte identical") {
  const std::string once = render(sample(), Format::Json);
  const std::string twice = render(parse_json_document(once), Format::Json);
  CHECK(once == twice);
  CHECK(once.find("\"inf\"") != std::string::npos);
  CHECK(once.find("0.333333333333333") != std::string::npos);
  CHECK(once.find("\"meta\"") < once.find("\"rows\""));
}

TEST_CASE("csv and markdown") {
  const std::string csv = render(sample(), Format::Csv);
  std::istringstream lines(csv);
  std::string first, header, row;
  std::getline(lines, first);
  std::getline(lines, header);
  std::getline(lines, row);
  CHECK(first.rfind("# ", 0) == 0);
  CHECK(first.find("coarse_grid=20001") != std::string::npos);
  CHECK(header == "name,count,value,note");
  CHECK(row == "P3,7,0.333333333333333,\"a,b \"\"quoted\"\" | pipe\"");

  const std::string md = render(sample(), Format::Markdown);
  CHECK(md.find("| name | count | value | note |") != std::string::npos);
  CHECK(md.find("\\| pipe") != std::string::npos);
  CHECK(md.find("config: coarse_grid=20001") != std::string::npos);
  CHECK_THROWS_AS(parse_format("xml"), DomainError);
}

TEST_CASE("fixtures are stored verbatim") {
  const TableFixture& s2 = table_fixture(TableId::S2);
  REQUIRE(s2.rows.size() == 7);
  CHECK(s2.rows[0].norm == "0.991227730027263");
  CHECK(s2.rows[6].value == "85.844178992096431");
  CHECK(s2.rows[5].floor_exponent == 9);
  CHECK(s2.rows[5].floor_exponent_used == 8);
  CHECK(!s2.rows[5].annotation.empty());
  const TableFixture& s4a = table_fixture(TableId::S4a);
  CHECK(s4a.rows[3].params == "0.191919,0.8181818");
  CHECK(s4a.rows[3].compute_params == "61/290,26/29");
  CHECK(table_fixture(TableId::S4c).rows[4].value == "1.65362");
  CHECK(table_fixture(TableId::S3).rows[5].params == "0.210344,0.896551");
  for (TableId id : all_tables()) CHECK(parse_table_id(table_fixture(id).name) == id);
  CHECK_THROWS_AS(parse_table_id("s5"), DomainError);
}

TEST_CASE("reproduce s2") {
  const auto rows = reproduce_table(TableId::S2, OptConfig{});
  CHECK(all_pass(rows));
  int annotated = 0;
  for (const Comparison& c : rows) annotated += c.status == Status::Annotated;
  CHECK(annotated == 1);
  const Document doc = comparison_document(rows, "hlb reproduce --table s2", OptConfig{});
  CHECK(doc.rows.size() == rows.size());
  CHECK(render(parse_json_document(render(doc, Format::Json)), Format::Json) == render(doc, Format::Json));
}
