#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "flowlab/capacity.hpp"
#include "flowlab/rational.hpp"
#include "support.hpp"

using namespace flowlab;

namespace {
Rational R(long long n, long long d = 1) { return Rational(BigInt(n), BigInt(d)); }
}  // namespace

TEST_CASE("canonical form is unique") {
  CHECK(R(2, 4) == R(1, 2));
  CHECK(R(2, 4).num() == 1);
  CHECK(R(2, 4).den() == 2);
  CHECK(R(-3, -6) == R(1, 2));
  CHECK(R(3, -6) == R(-1, 2));
  CHECK(R(0, 7).den() == 1);
  CHECK(R(0, 7).str() == "0");
}

TEST_CASE("arithmetic is exact") {
  CHECK(R(1, 3) + R(1, 6) == R(1, 2));
  CHECK(R(1, 26) + R(12, 13) == R(25, 26));
  CHECK(R(1, 2) * R(2, 3) == R(1, 3));
  CHECK(R(7, 3) / R(7, 3) == R(1));
  CHECK(-R(1, 2) == R(-1, 2));
  CHECK(R(1, 2) - R(1, 2) == R(0));
}

TEST_CASE("comparison orders by value") {
  CHECK(R(1, 3) < R(1, 2));
  CHECK(R(-1, 2) < R(-1, 3));
  CHECK(R(5) <= R(5));
  CHECK(R(12, 13) > R(1, 13));
}

TEST_CASE("round-trip properties on random rationals") {
  testsupport::InstanceSampler sampler(20240601);
  for (int trial = 0; trial < 500; ++trial) {
    long long pn = static_cast<long long>(sampler.below(2001)) - 1000;
    long long pd = 1 + static_cast<long long>(sampler.below(99));
    long long qn = static_cast<long long>(sampler.below(2001)) - 1000;
    long long qd = 1 + static_cast<long long>(sampler.below(99));
    Rational p = R(pn, pd), q = R(qn, qd);
    CHECK((p + q) - q == p);
    if (!p.isZero()) CHECK(p * p.inverse() == R(1));
    p.assertCanonical();
    (p * q).assertCanonical();
  }
}

TEST_CASE("big values stay exact far past 64 bits") {
  Rational big = rational_pow2(100);
  CHECK(big * R(1, 2) == rational_pow2(99));
  CHECK((big + R(1)) - big == R(1));
  CHECK(big.str() == "1267650600228229401496703205376");
}

TEST_CASE("text form round trips") {
  CHECK(Rational::fromString("-3/26").str() == "-3/26");
  CHECK(Rational::fromString("5").str() == "5");
  CHECK(Rational::fromString("5") == R(5));
  CHECK(Rational::fromString("10/4") == R(5, 2));
  CHECK(Rational::fromString(" 7/2 ") == R(7, 2));
  CHECK_THROWS_AS(Rational::fromString("1/0"), Error);
  CHECK_THROWS_AS(Rational::fromString("1.5"), Error);
  CHECK_THROWS_AS(Rational::fromString(""), Error);
  CHECK_THROWS_AS(Rational::fromString("inf"), Error);
}

TEST_CASE("division by zero is an error") {
  CHECK_THROWS_AS(R(1) / R(0), Error);
  CHECK_THROWS_AS(R(0).inverse(), Error);
}

TEST_CASE("common_granularity on the worked examples") {
  CHECK(common_granularity({R(1, 78), R(2, 78), R(3, 78)}) == R(1, 78));
  CHECK(common_granularity({R(3), R(3), R(3)}) == R(3));
  CHECK(common_granularity({R(1, 2), R(1, 3)}) == R(1, 6));
}

TEST_CASE("common_granularity errors") {
  CHECK_THROWS_AS(common_granularity({}), Error);
  CHECK_THROWS_AS(common_granularity({R(1), R(-2)}), Error);
  CHECK_THROWS_AS(common_granularity({R(0)}), Error);
}

TEST_CASE("common_granularity divides every input exactly") {
  testsupport::InstanceSampler sampler(77);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Rational> values;
    for (int i = 0; i < 5; ++i)
      values.push_back(R(1 + static_cast<long long>(sampler.below(400)),
                         1 + static_cast<long long>(sampler.below(40))));
    Rational g = common_granularity(values);
    for (const Rational& v : values) {
      Rational q = v / g;
      CHECK(q.isInteger());
      CHECK(q.sign() > 0);
    }
  }
}

TEST_CASE("capacity ordering and subtraction") {
  Capacity inf = Capacity::unbounded();
  CHECK(inf > Capacity(R(1000000)));
  CHECK(inf.minus(R(5)).isUnbounded());
  CHECK(Capacity(R(3)).minus(R(1)) == Capacity(R(2)));
  CHECK(min(inf, Capacity(R(2))) == Capacity(R(2)));
  CHECK(min(Capacity(R(1, 2)), Capacity(R(2, 3))) == Capacity(R(1, 2)));
  CHECK(R(1) < inf);
  CHECK_FALSE(inf < R(1));
}

TEST_CASE("capacity text form") {
  CHECK(Capacity::unbounded().str() == "inf");
  CHECK(Capacity(R(1, 2)).str() == "1/2");
  CHECK(Capacity::fromString("inf").isUnbounded());
  CHECK(Capacity::fromString("7/2") == Capacity(R(7, 2)));
}
