#include "gc/field.hpp"

#include <doctest.h>

#include <random>

using namespace gc;

TEST_CASE("rational arithmetic is exact") {
  Rational a = parse_rational("3/4"), b = parse_rational("-5/6");
  CHECK((a + b).str() == "-1/12");
  CHECK((a * b).str() == "-5/8");
  CHECK(parse_rational("6/8").str() == "3/4");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("x"), ParseError);
}

TEST_CASE("univariate polynomials: division and gcd") {
  UPoly x = UPoly::x();
  UPoly p = (x - UPoly(1)) * (x + UPoly(2)), q = (x - UPoly(1)) * (x - UPoly(3));
  CHECK(UPoly::gcd(p, q).monic() == (x - UPoly(1)));
}

TEST_CASE("rational functions normalize") {
  RatFunc c = RatFunc::c();
  RatFunc r = (c * c - RatFunc(1)) / (c - RatFunc(1));
  CHECK(r == c + RatFunc(1));
  CHECK((RatFunc(1) / c * c) == RatFunc(1));
  CHECK(is_zero(c - c));
}

TEST_CASE("cyclotomic roots of unity") {
  for (int m : {1, 2, 3, 4, 5, 6, 8, 12}) {
    Cyclotomic z = Cyclotomic::zeta(m), p(1);
    for (int k = 0; k < m; ++k) {
      if (k > 0) CHECK_FALSE(p == Cyclotomic(1));
      p *= z;
    }
    CHECK(p == Cyclotomic(1));
  }
  Cyclotomic z = Cyclotomic::zeta(3);
  CHECK(z * z + z + Cyclotomic(1) == Cyclotomic(0));
  CHECK((Cyclotomic(1) / z) * z == Cyclotomic(1));
}

TEST_CASE("field axioms hold on random cyclotomic elements") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> d(-3, 3);
  auto rnd = [&](int m) {
    Cyclotomic z = Cyclotomic::zeta(m), p(1), s(0);
    for (int k = 0; k < 4; ++k) {
      s += Cyclotomic(d(rng)) * p;
      p *= z;
    }
    return s;
  };
  for (int t = 0; t < 50; ++t) {
    Cyclotomic a = rnd(5), b = rnd(5), c = rnd(5);
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a * b) * c == a * (b * c));
    if (!(a == Cyclotomic(0))) CHECK(a * (Cyclotomic(1) / a) == Cyclotomic(1));
  }
}

TEST_CASE("field specs parse and report roots of unity") {
  CHECK(FieldSpec::parse("Q").name() == "Q");
  CHECK(FieldSpec::parse("cyclotomic:6").name() == "cyclotomic:6");
  CHECK(FieldSpec::parse("ratfun-c").name() == "ratfun-c");
  CHECK_THROWS_AS(FieldSpec::parse("R"), ParseError);
  CHECK(FieldTraits<Rational>::root_of_unity(2, FieldSpec::parse("Q")).has_value());
  CHECK_FALSE(FieldTraits<Rational>::root_of_unity(3, FieldSpec::parse("Q")).has_value());
  CHECK(FieldTraits<Cyclotomic>::root_of_unity(3, FieldSpec::parse("cyclotomic:6")).has_value());
}
