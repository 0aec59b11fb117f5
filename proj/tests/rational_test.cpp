#include <doctest.h>

#include <numeric>

#include "hallfrac/error.hpp"
#include "hallfrac/rational.hpp"
#include "support.hpp"

using namespace hallfrac;
using hallfrac::test::uniform_int;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected hallfrac::Error");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("reduce normalizes sign and common factors") {
  CHECK(reduce(2, 6) == Fraction(1, 3));
  CHECK(format(reduce(2, 6)) == "1/3");
  CHECK(format(reduce(-3, -9)) == "1/3");
  CHECK(format(reduce(3, -9)) == "-1/3");
  const Fraction zero = reduce(0, 5);
  CHECK(zero.numerator() == 0);
  CHECK(zero.denominator() == 1);
  CHECK(kind_of([] { reduce(1, 0); }) == ErrorKind::ZeroDenominator);
}

TEST_CASE("mediant") {
  CHECK(mediant(Fraction(1, 3), Fraction(1, 2)) == Fraction(2, 5));
  CHECK(mediant(Fraction(0), Fraction(1)) == Fraction(1, 2));

  // 2/7 is reduced and strictly between 1/4 and 1/3 (cross-multiplied).
  const Fraction m = mediant(Fraction(1, 4), Fraction(1, 3));
  CHECK(m == Fraction(2, 7));
  CHECK(std::gcd(2, 7) == 1);
  CHECK(1 * 7 < 2 * 4);
  CHECK(2 * 3 < 1 * 7);
}

TEST_CASE("parse and format") {
  CHECK(parse_fraction("11/6") == Fraction(11, 6));
  CHECK(parse_fraction("7") == Fraction(7));
  CHECK(parse_fraction("+4/8") == Fraction(1, 2));
  CHECK(parse_fraction("-0") == Fraction(0));
  CHECK(parse_fraction("-6/4") == Fraction(-3, 2));

  for (const char* bad : {"1/0", "", "a", "1/", "/2", "1 /2", "1/-2", "--1", "1.5", "1/2/3", "+"}) {
    INFO(bad);
    CHECK(kind_of([&] { parse_fraction(bad); }) == ErrorKind::ParseError);
  }

  CHECK(format(Fraction(7)) == "7");
  CHECK(format(Fraction(7), FractionStyle::Table) == "7/1");
  CHECK(format(Fraction(0), FractionStyle::Table) == "0/1");
  CHECK(format(Fraction(11, 6), FractionStyle::Table) == "11/6");
  CHECK(format(parse_fraction("10/4")) == "5/2");
}

TEST_CASE("arithmetic stays exact past 64 bits") {
  const BigInt big = BigInt(1) << 100;
  const Fraction a(big + 1, big);
  const Fraction b(big - 1, big);
  CHECK(a + b == Fraction(2));
  CHECK(a - b == Fraction(BigInt(2), big));
  CHECK((a * b).numerator() == big * big - 1);
  CHECK(a / a == Fraction(1));
  CHECK_THROWS_AS(a / Fraction(0), Error);
}

TEST_CASE("floor") {
  CHECK(Fraction(7, 2).floor() == 3);
  CHECK(Fraction(-7, 2).floor() == -4);
  CHECK(Fraction(-4).floor() == -4);
  CHECK(Fraction(0).floor() == 0);
}

TEST_CASE("property: results are reduced with positive denominator") {
  for (int i = 0; i < 2000; ++i) {
    const std::int64_t p = uniform_int(-1000, 1000);
    const std::int64_t q = uniform_int(-1000, 1000);
    if (q == 0) continue;
    const Fraction f(p, q);
    REQUIRE(f.denominator() > 0);
    const auto num = static_cast<std::int64_t>(f.numerator());
    const auto den = static_cast<std::int64_t>(f.denominator());
    REQUIRE(std::gcd(num < 0 ? -num : num, den) == (num == 0 ? den : 1));
    REQUIRE(num * q == p * den);  // same value

    const Fraction g(uniform_int(-50, 50), uniform_int(1, 50));
    for (const Fraction& r : {f + g, f - g, f * g, mediant(f, g)}) {
      REQUIRE(r.denominator() > 0);
      const BigInt gg = boost::multiprecision::gcd(r.numerator(), r.denominator());
      REQUIRE((r.is_zero() ? r.denominator() == 1 : gg == 1));
    }
  }
}

TEST_CASE("property: ordering agrees with cross-multiplication and is transitive") {
  for (int i = 0; i < 2000; ++i) {
    std::int64_t v[3][2];
    for (auto& x : v) {
      x[0] = uniform_int(-200, 200);
      x[1] = uniform_int(1, 200);
    }
    const Fraction a(v[0][0], v[0][1]), b(v[1][0], v[1][1]), c(v[2][0], v[2][1]);
    REQUIRE((a < b) == (v[0][0] * v[1][1] < v[1][0] * v[0][1]));
    REQUIRE((a == b) == (v[0][0] * v[1][1] == v[1][0] * v[0][1]));
    if (a < b && b < c) REQUIRE(a < c);
    if (a < b) {
      const Fraction m = mediant(a, b);
      REQUIRE(a < m);
      REQUIRE(m < b);
    }
  }
}

TEST_CASE("property: parse(format(x)) round-trips") {
  for (int i = 0; i < 500; ++i) {
    const Fraction f(uniform_int(-10000, 10000), uniform_int(1, 10000));
    REQUIRE(parse_fraction(format(f)) == f);
    REQUIRE(parse_fraction(format(f, FractionStyle::Table)) == f);
  }
}
