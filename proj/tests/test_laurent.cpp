#include <doctest.h>

#include "ck6/laurent.hpp"

using namespace ck6;

namespace {
LaurentPoly T(int m, int num = 1, int den = 1) {
  return LaurentPoly::monomial(m, make_rational(num, den));
}
}  // namespace

TEST_CASE("rational invariants") {
  Rational r = make_rational(6, -4);
  CHECK(numerator(r) == -3);
  CHECK(denominator(r) == 2);
  CHECK(binomial(Rational(1, 2), 1) == Rational(1, 2));
  CHECK(binomial(Rational(5, 3), 0) == 1);
  CHECK(binomial(Rational(5, 3), 2) == Rational(5, 9));
  CHECK(binomial(Rational(3), 2) == 3);
  CHECK_THROWS_AS(make_rational(1, 0), std::domain_error);
}

TEST_CASE("add") {
  CHECK(T(1) + T(-1) + (-T(-1)) == T(1));          // (t + t^-1) + (-t^-1) = t
  CHECK(T(3) + LaurentPoly::zero() == T(3));       // p + 0 = p
  CHECK(T(2, 2) + T(2, 3) == T(2, 5));             // 2t^2 + 3t^2 = 5t^2
  CHECK((T(2) + (-T(2))).is_zero());               // normalization: empty support
  CHECK((T(2) + (-T(2))).coefficients().empty());
}

TEST_CASE("mul") {
  CHECK((T(1) + T(-1)) * T(1) == T(2) + T(0));  // (t + t^-1) t = t^2 + 1
  LaurentPoly p = T(2, 3) + T(-1, -1, 2);
  CHECK(p * LaurentPoly::one() == p);
  CHECK(T(2) * T(-2) == LaurentPoly::one());
}

TEST_CASE("derive") {
  CHECK(derive(T(3)) == T(2, 3));
  CHECK(derive(LaurentPoly::one()).is_zero());
  CHECK(derive(T(-1)) == T(-2, -1));
}

TEST_CASE("derivation and ring properties on samples") {
  const LaurentPoly samples[] = {T(0), T(1), T(-2, 3), T(2) + T(0, -1, 2), T(-1) + T(4, 7)};
  for (const auto& p : samples)
    for (const auto& q : samples) {
      CHECK(derive(p * q) == derive(p) * q + p * derive(q));
      CHECK(p * q == q * p);
      CHECK(p + q == q + p);
      for (const auto& r : samples) {
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
      }
    }
}

TEST_CASE("text form") {
  LaurentPoly p = T(2, 3) + T(-1, -1, 2);
  CHECK(p.str() == "3t^2 - 1/2t^-1");
  CHECK(parse_poly("3t^2 - 1/2t^-1") == p);
  CHECK(parse_poly(" 3 * t^2-1/2t^-1 ") == p);
  CHECK(parse_poly("t") == T(1));
  CHECK(parse_poly("-t^-3 + 4") == T(-3, -1) + T(0, 4));
  CHECK(parse_poly("7/3") == T(0, 7, 3));
  CHECK_THROWS_AS(parse_poly(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly("t^"), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly("t + + t"), std::invalid_argument);

  // print/parse round trip on samples
  const LaurentPoly samples[] = {LaurentPoly::zero(), T(0, -1), T(1), T(-5, 2, 3),
                                 T(2, 3) + T(0, 1) + T(-7, -5, 4)};
  for (const auto& p2 : samples) CHECK(parse_poly(p2.str()) == p2);
}
