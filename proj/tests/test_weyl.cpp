#include <doctest.h>

#include "ck6/weyl.hpp"

using namespace ck6;

namespace {
const LaurentPoly t1 = LaurentPoly::t(1);
WeylElement D(int i, const LaurentPoly& c = LaurentPoly::one()) {
  return WeylElement::d_power(i, c);
}
WeylElement P(const LaurentPoly& c) { return WeylElement::from_poly(c); }

// checks that the ext element agrees with a finite Weyl element layer by layer
bool ext_equals_weyl(const ExtWeylElement& x, const WeylElement& w) {
  if (!is_integer(x.base())) return false;
  long base = to_long(x.base());
  for (int i = 0; i < x.depth(); ++i) {
    long e = base - i;
    LaurentPoly expect = e >= 0 ? w.coefficient(static_cast<int>(e)) : LaurentPoly();
    if (!(x.layer(i) == expect)) return false;
  }
  return true;
}
}  // namespace

TEST_CASE("weyl_mul defining relation") {
  // d t = t d + 1
  CHECK(D(1) * P(t1) == D(1, t1) + P(LaurentPoly::one()));
  // d^2 t = t d^2 + 2 d, two routes: iterated relation and the closed form
  WeylElement iterated = D(1) * (D(1) * P(t1));
  WeylElement direct = D(2) * P(t1);
  WeylElement frozen = D(2, t1) + D(1, LaurentPoly(Rational(2)));
  CHECK(iterated == frozen);
  CHECK(direct == frozen);
  // order-0 elements multiply commutatively
  LaurentPoly a = LaurentPoly::t(2) + LaurentPoly::one();
  LaurentPoly b = LaurentPoly::t(-1);
  CHECK(P(a) * P(b) == P(a * b));
  CHECK(P(a) * P(b) == P(b) * P(a));
}

TEST_CASE("weyl associativity and degree bookkeeping") {
  const WeylElement samples[] = {D(1), D(2, t1), P(LaurentPoly::t(-2)),
                                 D(1, LaurentPoly::t(3)) + P(t1), D(3, LaurentPoly::t(-1))};
  for (const auto& x : samples)
    for (const auto& y : samples)
      for (const auto& z : samples) CHECK((x * y) * z == x * (y * z));
  CHECK((D(2, t1) * D(3, LaurentPoly::t(-5))).top_power() == 5);
}

TEST_CASE("scalar Virasoro bracket in W") {
  // [a d, b d] = (ab' - a'b) d
  for (int ma = -2; ma <= 2; ++ma)
    for (int mb = -2; mb <= 2; ++mb) {
      const LaurentPoly a = LaurentPoly::t(ma), b = LaurentPoly::t(mb);
      WeylElement lhs = D(1, a) * D(1, b) - D(1, b) * D(1, a);
      CHECK(lhs == D(1, a * b.derivative() - a.derivative() * b));
    }
}

TEST_CASE("ext_mul_right_poly") {
  // d^(1/2) t = t d^(1/2) + 1/2 d^(-1/2)
  ExtWeylElement x = ext_mul_right_poly(ExtWeylElement::d_power(Rational(1, 2), 8), t1);
  ExtWeylElement expect(Rational(1, 2), 8);
  expect.set_layer(0, t1);
  expect.set_layer(1, LaurentPoly(Rational(1, 2)));
  CHECK(equal_retained(x, expect));

  // d^beta 1 = d^beta
  ExtWeylElement y =
      ext_mul_right_poly(ExtWeylElement::d_power(Rational(-7, 3), 6), LaurentPoly::one());
  CHECK(equal_retained(y, ExtWeylElement::d_power(Rational(-7, 3), 6)));

  // integer base agrees with plain Weyl arithmetic
  ExtWeylElement z = ext_mul_right_poly(ExtWeylElement::d_power(Rational(2), 8), t1);
  CHECK(ext_equals_weyl(z, D(2) * P(t1)));
}

TEST_CASE("act_left_weyl") {
  // (t d) d^beta = t d^(beta+1)
  const Rational beta(3, 2);
  ExtWeylElement got = act_left_weyl(D(1, t1), ExtWeylElement::d_power(beta, 8));
  ExtWeylElement expect(beta + 1, 8);
  expect.set_layer(0, t1);
  CHECK(equal_retained(got, expect));
  CHECK(got.base() == beta + 1);

  // 1 y = y
  ExtWeylElement y = ext_mul_right_poly(ExtWeylElement::d_power(beta, 8), LaurentPoly::t(2));
  CHECK(equal_retained(act_left_weyl(P(LaurentPoly::one()), y), y));

  // (a d)(b d^beta) = a b d^(beta+1) + a b' d^beta
  LaurentPoly a = LaurentPoly::t(2), b = LaurentPoly::t(3);
  ExtWeylElement u(beta, 8);
  u.set_layer(0, b);
  ExtWeylElement lhs = act_left_weyl(D(1, a), u);
  ExtWeylElement rhs(beta + 1, 8);
  rhs.set_layer(0, a * b);
  rhs.set_layer(1, a * b.derivative());
  CHECK(equal_retained(lhs, rhs));
}

TEST_CASE("ext_project") {
  const Rational beta(1, 2);
  ExtWeylElement x(beta, 4);
  x.set_layer(0, t1);
  x.set_layer(1, LaurentPoly::t(2));
  SUBCASE("drop one layer") {
    ExtWeylElement got = ext_project(x, beta - 1);
    CHECK(got.layer(0) == t1);
    CHECK(got.layer(1).is_zero());
  }
  SUBCASE("floor below the truncation is a no-op") {
    CHECK(equal_retained(ext_project(x, beta - 10), x));
  }
  SUBCASE("compose with the commutation rule") {
    ExtWeylElement y = ext_project(ext_mul_right_poly(ExtWeylElement::d_power(beta, 8), t1),
                                   beta - 1);
    ExtWeylElement expect(beta, 8);
    expect.set_layer(0, t1);
    CHECK(equal_retained(y, expect));
  }
  SUBCASE("incomparable floor") {
    CHECK_THROWS_AS(ext_project(x, Rational(0)), std::domain_error);
    CHECK_THROWS_AS(ext_project(x, beta + 1), std::domain_error);
  }
}

TEST_CASE("ext addition comparability") {
  ExtWeylElement a = ExtWeylElement::d_power(Rational(1, 2), 6);
  ExtWeylElement b = ExtWeylElement::d_power(Rational(5, 2), 6);
  ExtWeylElement c = ExtWeylElement::d_power(Rational(1, 3), 6);
  CHECK((a + b).base() == Rational(5, 2));
  CHECK_THROWS_AS(a + c, std::domain_error);
  CHECK_THROWS_AS(equal_retained(a, c), std::domain_error);
}

TEST_CASE("truncated associativity (x a) b = x (ab)") {
  const LaurentPoly polys[] = {t1, LaurentPoly::t(-2), LaurentPoly::t(2) + LaurentPoly::one()};
  for (const Rational& gamma : {Rational(1, 2), Rational(-1), Rational(5, 3)}) {
    ExtWeylElement x = ExtWeylElement::d_power(gamma, 8);
    x = x + ext_mul_right_poly(ExtWeylElement::d_power(gamma - 1, 8), LaurentPoly::t(-1));
    for (const auto& a : polys)
      for (const auto& b : polys)
        CHECK(equal_retained(ext_mul_right_poly(ext_mul_right_poly(x, a), b),
                             ext_mul_right_poly(x, a * b)));
  }
}
