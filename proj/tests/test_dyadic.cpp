#include <doctest.h>

#include <random>

#include <boost/multiprecision/cpp_int.hpp>

#include "autf/dyadic.hpp"
#include "autf/errors.hpp"

using autf::Dyadic;
using Rational = boost::multiprecision::cpp_rational;

namespace {

Rational as_rational(const Dyadic& d) {
  Rational r(d.numerator());
  return r / Rational(boost::multiprecision::cpp_int(1) << d.exponent());
}

Dyadic random_dyadic(std::mt19937_64& rng, int max_exp, bool huge) {
  std::uniform_int_distribution<std::int64_t> num(-1000, 1000);
  std::uniform_int_distribution<int> ex(0, max_exp);
  autf::BigInt n = num(rng);
  if (huge) n = n * (autf::BigInt(1) << 90) + num(rng);
  return Dyadic::from_parts(n, ex(rng));
}

}  // namespace

TEST_CASE("dyadic arithmetic examples") {
  CHECK(Dyadic::parse("1/2^1") + Dyadic::parse("1/2^1") == Dyadic(1));
  CHECK(Dyadic::parse("3/2^2") * Dyadic::parse("1/2^1") == Dyadic::parse("3/2^3"));
  Dyadic d = autf::arith(Dyadic::parse("3/2^2"), Dyadic::parse("1/2^3"), autf::ArithOp::sub);
  CHECK(as_rational(d) == Rational(3, 4) - Rational(1, 8));
  CHECK(d.to_string() == "5/2^3");
}

TEST_CASE("compare_floor examples") {
  auto r = autf::compare_floor(Dyadic::parse("3/2^2"), Dyadic::parse("1/2^1"));
  CHECK(r.order == std::strong_ordering::greater);
  CHECK(r.floor == Dyadic(0));
  CHECK_FALSE(r.is_integer);
  r = autf::compare_floor(Dyadic::parse("-1/2^2"), Dyadic::parse("-1/2^2"));
  CHECK(r.order == std::strong_ordering::equal);
  CHECK(r.floor == Dyadic(-1));
  r = autf::compare_floor(Dyadic(2), Dyadic(7));
  CHECK(r.floor == Dyadic(2));
  CHECK(r.is_integer);
  CHECK(Dyadic::parse("-1/2^2").ceil() == Dyadic(0));
}

TEST_CASE("parse and format") {
  CHECK(Dyadic::parse("3/2^2") == Dyadic::from_parts(3, 2));
  CHECK(Dyadic::parse("-5") == Dyadic(-5));
  CHECK_THROWS_AS(Dyadic::parse("6/2^1"), autf::ParseError);
  CHECK(Dyadic::parse("6/2^1", false).to_string() == "3");
  CHECK_THROWS_AS(Dyadic::parse("3/2^"), autf::ParseError);
  CHECK_THROWS_AS(Dyadic::parse("03"), autf::ParseError);
  CHECK_THROWS_AS(Dyadic::parse("-0"), autf::ParseError);
  CHECK_THROWS_AS(Dyadic::parse("1/3"), autf::ParseError);
  try {
    Dyadic::parse("12x");
    FAIL("expected ParseError");
  } catch (const autf::ParseError& e) {
    CHECK(e.position() == 2);
  }
}

TEST_CASE("ring axioms against rational oracle") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    bool huge = i % 5 == 0;
    Dyadic a = random_dyadic(rng, 80, huge), b = random_dyadic(rng, 12, false),
           c = random_dyadic(rng, 70, i % 7 == 0);
    Rational ra = as_rational(a), rb = as_rational(b), rc = as_rational(c);
    CHECK(as_rational(a + b) == ra + rb);
    CHECK(as_rational(a - c) == ra - rc);
    CHECK(as_rational(a * c) == ra * rc);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(((a < b) == (ra < rb)));
    CHECK(Dyadic::parse(a.to_string()) == a);
    CHECK(Dyadic::parse(a.to_string()).to_string() == a.to_string());
    CHECK(a.scaled(5).scaled(-5) == a);
    if (a == b) CHECK(a.hash() == b.hash());
    Rational fl = as_rational(a.floor());
    CHECK(fl <= ra);
    CHECK(ra < fl + 1);
  }
}

TEST_CASE("big values fall back and return inline") {
  Dyadic big = Dyadic::pow2(100);
  Dyadic back = (big + Dyadic(1)) - big;
  CHECK(back == Dyadic(1));
  CHECK(back.heap_bytes() == 0);
  CHECK(back.hash() == Dyadic(1).hash());
  CHECK(autf::power_ratio(Dyadic::pow2(70), Dyadic::parse("1/2^3")) == autf::PowerOfTwo{73});
  CHECK_FALSE(autf::power_ratio(Dyadic(3), Dyadic(1)).has_value());
}
