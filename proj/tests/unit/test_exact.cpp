#include <doctest.h>

#include "pgc/decimal.hpp"
#include "pgc/interval.hpp"
#include "pgc/poly.hpp"
#include "support.hpp"

using namespace pgc;
using testsupport::Rng;

TEST_CASE("rationals stay canonical") {
  CHECK(Rational(Int(4), Int(8)) == Rational(Int(1), Int(2)));
  CHECK(Rational(Int(-4), Int(-8)) == Rational(Int(1), Int(2)));
  CHECK(Rational(Int(3), Int(-6)).den() == Int(2));
  CHECK(Rational(Int(3), Int(-6)).num() == Int(-1));
  CHECK(Rational(Int(0), Int(-7)) == Rational(0));
  CHECK_THROWS_AS(Rational(Int(1), Int(0)), DomainError);

  Rational a(Int(2), Int(3)), b(Int(5), Int(7));
  CHECK(a + b == Rational(Int(29), Int(21)));
  CHECK(a * b == Rational(Int(10), Int(21)));
  CHECK(a / b == Rational(Int(14), Int(15)));
  CHECK((a - b).sign() == -1);
  CHECK(a.pow(3) == Rational(Int(8), Int(27)));
  CHECK(a.pow(-2) == Rational(Int(9), Int(4)));
  CHECK(Rational(Int(-2), Int(3)).pow(-3) == Rational(Int(-27), Int(8)));
}

TEST_CASE("rational text round trip rejects non-canonical input") {
  CHECK(Rational::from_str("8/5") == Rational(Int(8), Int(5)));
  CHECK(Rational::from_str("-7") == Rational(-7));
  CHECK(Rational(Int(-22), Int(4)).str() == "-11/2");
  CHECK_THROWS_AS(Rational::from_str("4/8"), ParseError);
  CHECK_THROWS_AS(Rational::from_str("1/-2"), ParseError);
  CHECK_THROWS_AS(Rational::from_str("03"), ParseError);
  CHECK_THROWS_AS(Rational::from_str("5/1"), ParseError);
  CHECK_THROWS_AS(Rational::from_str(""), ParseError);
}

TEST_CASE("decimal literals parse exactly") {
  CHECK(parse_decimal("0.6263716633") == Rational(Int(6263716633LL), pow10(10)));
  CHECK(parse_decimal("2.1701388889e-11") == Rational(Int(21701388889LL), pow10(21)));
  CHECK(parse_decimal("-3.25") == Rational(Int(-13), Int(4)));
  CHECK(parse_decimal("1e3") == Rational(1000));
  CHECK(parse_decimal("16") == Rational(16));

  CHECK_THROWS_AS(parse_decimal("0.62.63"), ParseError);
  CHECK_THROWS_AS(parse_decimal(""), ParseError);
  CHECK_THROWS_AS(parse_decimal("1.2e"), ParseError);
  CHECK_THROWS_AS(parse_decimal("."), ParseError);
  try {
    parse_decimal("0.62.63");
  } catch (const ParseError& e) {
    CHECK(e.position == 4);
  }
}

TEST_CASE("exact decimal rendering") {
  CHECK(to_decimal_string(Rational(Int(6263716632LL), pow10(10)), 10) == "0.6263716632");
  CHECK(to_decimal_string(Rational(Int(-13), Int(4)), 2) == "-3.25");
  CHECK(to_decimal_string(Rational(Int(1), Int(8)), 5) == "0.12500");
  CHECK(to_decimal_string(Rational(7), 0) == "7");
  CHECK_THROWS_AS(to_decimal_string(Rational(Int(1), Int(3)), 10), DomainError);
}

TEST_CASE("parse then render is the identity on canonical literals") {
  Rng rng(2024);
  for (int i = 0; i < 200; ++i) {
    long long mantissa = rng.integer(-999999999, 999999999);
    unsigned digits = static_cast<unsigned>(rng.integer(0, 12));
    Rational value(Int(mantissa), pow10(digits));
    std::string text = to_decimal_string(value, digits);
    CHECK(parse_decimal(text) == value);
  }
}

TEST_CASE("interval arithmetic matches the endpoint-combination oracle") {
  CHECK(Interval(Rational(Int(1), Int(2))) + Interval(Rational(Int(1), Int(3))) ==
        Interval(Rational(Int(5), Int(6))));
  CHECK(Interval(Rational(-1), Rational(2)) * Interval(Rational(3), Rational(4)) ==
        Interval(Rational(-4), Rational(8)));
  CHECK_THROWS_AS(Interval(Rational(1), Rational(2)) / Interval(Rational(-1), Rational(1)),
                  DomainError);

  // Oracle: brute force over all endpoint combinations.
  Rng rng(7);
  for (int i = 0; i < 300; ++i) {
    Interval x = rng.interval();
    Interval y = rng.interval();
    Interval product = x * y;
    Rational lo, hi;
    bool first = true;
    for (const Rational& a : {x.lo(), x.hi()})
      for (const Rational& b : {y.lo(), y.hi()}) {
        Rational p = a * b;
        if (first || p < lo) lo = p;
        if (first || p > hi) hi = p;
        first = false;
      }
    CHECK(product == Interval(lo, hi));
  }
}

TEST_CASE("interval powers against a sampling oracle") {
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    Interval x = rng.interval(50, 20);
    for (int e : {0, 1, 2, 3, 4, 5}) {
      Interval p = x.pow(e);
      for (int s = 0; s <= 8; ++s) {
        Rational point = x.lo() + x.width() * Rational(Int(s), Int(8));
        CHECK(p.contains(point.pow(e)));
      }
      // Endpoints are attained (or zero, for even powers through zero).
      if (e % 2 == 1 || !x.contains_zero()) {
        CHECK((p.lo() == x.lo().pow(e) || p.lo() == x.hi().pow(e)));
      } else if (e > 0) {
        CHECK(p.lo() == Rational(0));
      }
    }
  }
  CHECK(Interval(Rational(2), Rational(3)).pow(-2) ==
        Interval(Rational(Int(1), Int(9)), Rational(Int(1), Int(4))));
  CHECK_THROWS_AS(Interval(Rational(-1), Rational(1)).pow(-1), DomainError);
}

TEST_CASE("degenerate inputs stay degenerate and exact") {
  Rng rng(13);
  for (int i = 0; i < 100; ++i) {
    Rational a = rng.rational(1000, 1000);
    Rational b = rng.rational(1000, 1000);
    Interval x(a), y(b);
    CHECK((x + y).is_degenerate());
    CHECK((x * y) == Interval(a * b));
    CHECK((x - y) == Interval(a - b));
    if (!b.is_zero()) CHECK((x / y) == Interval(a / b));
  }
}

TEST_CASE("inclusion monotonicity of interval operations") {
  Rng rng(17);
  for (int i = 0; i < 1000; ++i) {
    auto [x, xo] = rng.nested_intervals();
    auto [y, yo] = rng.nested_intervals();
    CHECK((xo + yo).contains(x + y));
    CHECK((xo - yo).contains(x - y));
    CHECK((xo * yo).contains(x * y));
    CHECK((-xo).contains(-x));
    int e = static_cast<int>(rng.integer(0, 4));
    CHECK(xo.pow(e).contains(x.pow(e)));
  }
}

TEST_CASE("outward rounding encloses and stays tight") {
  CHECK(outward_round(Interval(Rational(Int(1), Int(3))), 3).text() == "0.333 .. 0.334");
  Interval paper_bracket(Rational(Int(6263716632LL), pow10(10)),
                         Rational(Int(6263716634LL), pow10(10)));
  CHECK(outward_round(paper_bracket, 10).text() == "0.6263716632 .. 0.6263716634");

  // Oracle: compare with the exact decimal expansions of 2/7 and 3/7.
  DecimalBounds sevenths =
      outward_round(Interval(Rational(Int(2), Int(7)), Rational(Int(3), Int(7))), 2);
  CHECK(sevenths.lo == "0.28");
  CHECK(sevenths.hi == "0.43");
  CHECK(sevenths.lo_value <= Rational(Int(2), Int(7)));
  CHECK(sevenths.hi_value >= Rational(Int(3), Int(7)));

  Rng rng(19);
  for (int i = 0; i < 200; ++i) {
    Interval x = rng.interval();
    unsigned digits = static_cast<unsigned>(rng.integer(1, 8));
    DecimalBounds rendered = outward_round(x, digits);
    CHECK(rendered.lo_value <= x.lo());
    CHECK(rendered.hi_value >= x.hi());
    Rational slack = rendered.hi_value - rendered.lo_value - x.width();
    CHECK(slack < Rational(2) / Rational(pow10(digits)));
    CHECK(parse_decimal(rendered.lo) == rendered.lo_value);
    CHECK(parse_decimal(rendered.hi) == rendered.hi_value);
  }
}

TEST_CASE("polynomial arithmetic and interval Horner") {
  Poly p({Rational(-1), Rational(0), Rational(6), Rational(-16), Rational(3)});
  CHECK(p.degree() == 4);
  CHECK(p.eval(Rational(0)) == Rational(-1));
  CHECK(p.eval(Rational(1)) == Rational(-8));
  CHECK(p.derivative() == Poly({Rational(0), Rational(12), Rational(-48), Rational(12)}));

  Poly lin({Rational(1), Rational(-1)});  // 1 - t
  CHECK(lin.pow(2) == Poly({Rational(1), Rational(-2), Rational(1)}));
  CHECK((lin * lin) * lin == lin.pow(3));

  Rng rng(23);
  for (int i = 0; i < 200; ++i) {
    std::vector<Rational> coeffs;
    for (int k = rng.integer(0, 6); k >= 0; --k) coeffs.push_back(rng.rational(50, 10));
    Poly q(coeffs);
    Interval x = rng.interval(20, 10);
    Interval range = q.eval_interval(x);
    for (int s = 0; s <= 6; ++s) {
      Rational point = x.lo() + x.width() * Rational(Int(s), Int(6));
      CHECK(range.contains(q.eval(point)));
    }
  }
  CHECK(Poly::from_str("[1,-1]") == lin);
  CHECK(lin.str() == "[1,-1]");
  CHECK_THROWS_AS(Poly::from_str("[1,0]"), ParseError);
}
