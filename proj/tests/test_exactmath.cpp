#include <gtest/gtest.h>

#include "countforge/error.hpp"
#include "countforge/exactmath.hpp"

using namespace countforge;

TEST(Lagrange, LineThroughTwoPoints) {
  const std::vector<InterpolationPoint> pts = {{0, 1}, {1, 2}};
  EXPECT_EQ(lagrange_interpolate(pts), Poly({1, 1}));
}

TEST(Lagrange, ExactQuadratic) {
  const std::vector<InterpolationPoint> pts = {{0, 0}, {1, 1}, {2, 4}};
  EXPECT_EQ(lagrange_interpolate(pts), Poly({0, 0, 1}));
}

TEST(Lagrange, DuplicateNode) {
  const std::vector<InterpolationPoint> pts = {{0, 1}, {0, 2}};
  EXPECT_THROW(lagrange_interpolate(pts), DuplicateNode);
}

TEST(Lagrange, RationalNodes) {
  const Poly p({Rational(1, 3), -2, 0, Rational(5, 7)});
  std::vector<InterpolationPoint> pts;
  for (const Rational& x : {Rational(-1, 2), Rational(2, 3), Rational(5), Rational(-7, 4)}) pts.emplace_back(x, p(x));
  EXPECT_EQ(lagrange_interpolate(pts), p);
}

TEST(Shift, Binomial) {
  EXPECT_EQ(shift_substitute(Poly({0, 0, 1}), 1), Poly({1, 2, 1}));
  EXPECT_EQ(shift_substitute(Poly::constant(Rational(3, 4)), 9), Poly::constant(Rational(3, 4)));
  EXPECT_EQ(shift_substitute(Poly::identity(), -1), Poly({-1, 1}));
}

TEST(Poly, TrimsAndCompares) {
  EXPECT_TRUE(Poly({0, 0}).is_zero());
  EXPECT_EQ(Poly({1, 0, 0}).degree(), 0);
  EXPECT_EQ((Poly({1, 1}) * Poly({-1, 1})), Poly({-1, 0, 1}));
  EXPECT_EQ(Poly::linear_factor(3)(3), 0);
}

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(parse_rational("-6/4"), Rational(-3, 2));
  EXPECT_EQ(to_string(Rational(-3, 2)), "-3/2");
  EXPECT_EQ(to_string(Rational(4)), "4");
  EXPECT_THROW(parse_rational("1/0"), InvalidArgument);
  EXPECT_THROW(parse_rational("x"), Error);
}

TEST(Rational, FallingFactorial) {
  EXPECT_EQ(falling_factorial(5, 3), 60);
  EXPECT_EQ(falling_factorial(Rational(1, 2), 0), 1);
  EXPECT_EQ(falling_factorial(2, 3), 0);
}

TEST(Rational, NegativePower) {
  EXPECT_EQ(pow(Rational(2, 3), -2), Rational(9, 4));
  EXPECT_EQ(pow(Integer(3), 4UL), 81);
}
