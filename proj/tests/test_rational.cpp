#include "doctest.h"

#include "consent/extended_real.hpp"
#include "consent/rational.hpp"

using namespace consent;

TEST_CASE("rational arithmetic is exact and normalized") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-1, -2) == Rational(1, 2));
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK(Rational(3, 2) * Rational(2, 3) == Rational(1));
  CHECK(Rational(1, 2) - Rational(1, 2) == Rational(0));
  CHECK(Rational(7, 3) / Rational(7, 3) == Rational(1));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational parse and format round-trip") {
  CHECK(Rational::parse("1/2") == Rational(1, 2));
  CHECK(Rational::parse("-3") == Rational(-3));
  CHECK(Rational::parse("-6/4") == Rational(-3, 2));
  CHECK(Rational::parse("0") == Rational(0));
  CHECK(Rational(5, 3).str() == "5/3");
  CHECK(Rational(-4, 2).str() == "-2");
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("a/b"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/2/3"), std::invalid_argument);
}

TEST_CASE("dot product over integer bundles") {
  std::vector<Rational> p{Rational(1, 2), Rational(2)};
  std::vector<int> x{3, 1};
  CHECK(dot(p, x) == Rational(7, 2));
  CHECK_THROWS_AS(dot(p, std::vector<int>{1}), std::invalid_argument);
}

TEST_CASE("negative infinity sits below every rational") {
  ExtReal bottom = ExtReal::neg_inf();
  CHECK(bottom < ExtReal(Rational(-1000000)));
  CHECK(!(bottom < bottom));
  CHECK(bottom == ExtReal::neg_inf());
  CHECK(max(bottom, ExtReal(Rational(1, 2))) == ExtReal(Rational(1, 2)));
  CHECK(bottom.str() == "-inf");
  CHECK(ExtReal(Rational(3, 2)).str() == "3/2");
  CHECK_THROWS_AS(bottom.value(), std::logic_error);
}
