#include <gmpxx.h>

#include <random>
#include <vector>

#include "doctest.h"
#include "hlb/eft.hpp"

using namespace hlb;

TEST_CASE("two_sum and two_prod are exact") {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> mant(-1.0, 1.0);
  std::uniform_int_distribution<int> ex(-60, 60);
  for (int i = 0; i < 2000; ++i) {
    const double a = std::ldexp(mant(rng), ex(rng));
    const double b = std::ldexp(mant(rng), ex(rng));
    const TwoTerm s = two_sum(a, b);
    CHECK(mpq_class(s.hi) + mpq_class(s.lo) == mpq_class(a) + mpq_class(b));
    CHECK(s.hi == a + b);
    const TwoTerm p = two_prod(a, b);
    CHECK(mpq_class(p.hi) + mpq_class(p.lo) == mpq_class(a) * mpq_class(b));
  }
}

TEST_CASE("fast_two_sum is exact when |a| >= |b|") {
  const TwoTerm s = fast_two_sum(1.0, 0x1p-60);
  CHECK(s.hi == 1.0);
  CHECK(s.lo == 0x1p-60);
}

TEST_CASE("compensated sum recovers cancellation") {
  const std::vector<double> xs{1e16, 1.0, -1e16, 1.0};
  double naive = 0.0;
  for (double x : xs) naive += x;
  CHECK(naive != 2.0);
  CHECK(compensated_sum(xs) == 2.0);

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> big;
  mpq_class exact(0);
  for (int i = 0; i < 5000; ++i) {
    const double v = std::ldexp(u(rng), static_cast<int>(rng() % 80) - 40);
    big.push_back(v);
    big.push_back(-v * (1.0 + 0x1p-40));
    exact += mpq_class(v) + mpq_class(-v * (1.0 + 0x1p-40));
  }
  const double got = compensated_sum(big);
  const double rel = std::abs(mpq_class((mpq_class(got) - exact) / exact).get_d());
  CHECK(rel < 1e-14);
}

TEST_CASE("compensated dot product") {
  CompensatedDot dot;
  dot.add_product(1e8, 1e8);
  dot.add_product(1.0, 1.0);
  dot.add_product(-1e8, 1e8);
  CHECK(dot.value() == 1.0);
}
