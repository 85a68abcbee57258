#include <gmpxx.h>

#include <random>

#include "doctest.h"
#include "hlb/error.hpp"
#include "hlb/expansion.hpp"
#include "oracle/exact.hpp"

using namespace hlb;

namespace {

Ext random_ext(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  ExpansionAccumulator<kLimbs> acc;
  for (int i = 0; i < kLimbs; ++i) acc.add(std::ldexp(u(rng), -60 * i));
  return acc.result();
}

double rel_to(const Ext& got, const mpq_class& exact) {
  return std::abs(mpq_class((oracle::exact_value(got) - exact) / exact).get_d());
}

}  // namespace

TEST_CASE("limbs are ordered by decreasing magnitude") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const Ext e = random_ext(rng);
    for (int j = 1; j < kLimbs; ++j) {
      if (e.limb[j] != 0.0) CHECK(std::abs(e.limb[j]) <= std::abs(e.limb[j - 1]));
    }
  }
}

TEST_CASE("arithmetic keeps about 200 bits") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const Ext a = random_ext(rng), b = random_ext(rng);
    const mpq_class qa = oracle::exact_value(a), qb = oracle::exact_value(b);
    CHECK(rel_to(a * b, qa * qb) < 1e-60);
    CHECK(rel_to(a / b, qa / qb) < 1e-60);
    // Sums may cancel; compare against the operand scale.
    const mpq_class scale = abs(qa) + abs(qb);
    CHECK(std::abs(mpq_class((oracle::exact_value(a + b) - (qa + qb)) / scale).get_d()) < 1e-60);
    CHECK(std::abs(mpq_class((oracle::exact_value(a - b) - (qa - qb)) / scale).get_d()) < 1e-60);
  }
}

TEST_CASE("sqrt squares back") {
  const Ext two(2.0);
  const Ext r = sqrt(two);
  CHECK(rel_to(r * r, mpq_class(2)) < 1e-60);
  CHECK(sqrt(Ext(0.0)).is_zero());
}

TEST_CASE("decimal parsing is exact to expansion precision") {
  const std::pair<const char*, const char*> cases[] = {
      {"-2.2654", "-22654/10000"}, {"0.19462", "19462/100000"}, {"0.8181818", "8181818/10000000"},
      {"1e-3", "1/1000"}, {"12345.6789e2", "12345678900/10000"}, {"+.5", "1/2"}};
  for (const auto& [text, exact] : cases) {
    CHECK(rel_to(parse_decimal_expansion<kLimbs>(text), mpq_class(exact)) < 1e-60);
  }
  CHECK(parse_decimal_expansion<kLimbs>("0.000").is_zero());
  CHECK_THROWS_AS(parse_decimal_expansion<kLimbs>("1.2.3"), DomainError);
  CHECK_THROWS_AS(parse_decimal_expansion<kLimbs>("abc"), DomainError);
  CHECK_THROWS_AS(parse_decimal_expansion<kLimbs>(""), DomainError);
}
