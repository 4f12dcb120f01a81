#include <gtest/gtest.h>

#include "ctrop/poly.hpp"

using namespace ctrop;

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
  EXPECT_EQ(to_string(parse_rational("-3")), "-3/1");
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
}

TEST(Gaussian, Arithmetic) {
  GaussianRational i = GaussianRational::i();
  EXPECT_EQ(i * i, GaussianRational(-1));
  GaussianRational z(Rational(1), Rational(2));
  EXPECT_EQ(z / z, GaussianRational(1));
  EXPECT_THROW(z / GaussianRational(0), std::domain_error);
}

TEST(SparsePoly, ArithmeticCancels) {
  Poly x = Poly::variable(2, 0), y = Poly::variable(2, 1);
  Poly p = (x + y) * (x - y);
  EXPECT_EQ(p, x * x - y * y);
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ(p.size(), 2u);
}

TEST(SparsePoly, InitialForm) {
  Poly x = Poly::variable(2, 0), y = Poly::variable(2, 1);
  Poly p = x * x + x * y + y;
  std::vector<Rational> w{Rational(1), Rational(0)};
  EXPECT_EQ(p.initial_form(w), x * x);
  EXPECT_EQ(p.initial_form({Rational(0), Rational(0)}), p);
  EXPECT_EQ(p.initial_form(w).initial_form(w), p.initial_form(w));
  EXPECT_THROW(Poly(2).initial_form(w), PreconditionError);
  // products: x^2 = 9, xy = 6, y = 2; then x^2 = xy = 4, y = 2
  EXPECT_EQ(p.initial_form_multiplicative({Rational(3), Rational(2)}), x * x);
  EXPECT_EQ(p.initial_form_multiplicative({Rational(2), Rational(2)}), x * x + x * y);
}

TEST(MonomialMap, GroupsTerms) {
  // x0 -> t, x1 -> i*t: x0^2 + x1^2 maps to t^2 - t^2 = 0
  MonomialMap<GaussianRational> m(2, 1);
  m.set(0, {1}, GaussianRational(1));
  m.set(1, {1}, GaussianRational::i());
  Poly x = Poly::variable(2, 0), y = Poly::variable(2, 1);
  EXPECT_TRUE(m.apply(x * x + y * y).is_zero());
  EXPECT_FALSE(m.apply(x * x - y * y).is_zero());
}

TEST(SparsePoly, LaurentEvaluate) {
  RationalPoly p = RationalPoly::monomial({2, -1}, Rational(3));
  EXPECT_EQ(p.evaluate<Rational>({Rational(2), Rational(4)}), Rational(3));
}
