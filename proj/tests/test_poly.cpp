#include <gtest/gtest.h>

#include <random>

#include "birch/poly.hpp"
#include "support/oracles.hpp"

using namespace birch;

namespace {
const std::vector<std::string> kXY = {"x", "y"};
}

TEST(Rational, ParsesIntegersFractionsAndDecimals) {
  EXPECT_EQ(rational_from_string("-12"), Rational(-12));
  EXPECT_EQ(rational_from_string("3/6"), Rational(1, 2));
  EXPECT_EQ(rational_from_string("2.5"), Rational(5, 2));
  EXPECT_EQ(to_string(rational_from_string("4/2")), "2");
  EXPECT_EQ(lcm_of_denominators({Rational(1, 4), Rational(5, 6), Rational(2)}), Integer(12));
}

TEST(Rational, BestRationalFindsConvergent) {
  EXPECT_EQ(best_rational(rational_from_double(3.14159265358979), Integer(1000)), Rational(355, 113));
  EXPECT_EQ(best_rational(Rational(1, 3), Integer(10)), Rational(1, 3));
}

TEST(Parse, ReadsSupportAndCoefficients) {
  const auto f = parse("-8*y^8 - 4*x^4*y^4 - 8 + 21*x*y^4 + 5*x^3*y^2", kXY);
  EXPECT_EQ(f.size(), 5u);
  EXPECT_EQ(f.coefficient({0, 8}), Rational(-8));
  EXPECT_EQ(f.coefficient({4, 4}), Rational(-4));
  EXPECT_EQ(f.coefficient({0, 0}), Rational(-8));
  EXPECT_EQ(f.coefficient({1, 4}), Rational(21));
  EXPECT_EQ(f.coefficient({3, 2}), Rational(5));
}

TEST(Parse, ZeroAndCancellation) {
  EXPECT_TRUE(parse("0", kXY).is_zero());
  EXPECT_TRUE(parse("x^2*y - y*x^2", kXY).is_zero());
  EXPECT_EQ(parse("0", kXY).to_string(kXY), "0");
}

TEST(Parse, RejectsBadInput) {
  EXPECT_THROW(parse("x^1.5", kXY), ParseError);
  EXPECT_THROW(parse("x^-1", kXY), ParseError);
  EXPECT_THROW(parse("x + z", kXY), ParseError);
  EXPECT_THROW(parse("x +* y", kXY), ParseError);
  try {
    parse("x + z", kXY);
  } catch (const ParseError& e) {
    EXPECT_EQ(e.kind(), ParseError::Kind::UnknownVariable);
  }
}

TEST(Parse, RoundTripsThroughCanonicalText) {
  const auto f = parse("3/2*x^2*y - 7 + y^5 - x", kXY);
  EXPECT_EQ(parse(f.to_string(kXY), kXY), f);
}

TEST(Evaluate, ExactValues) {
  const auto f = parse("-8*y^8-4*x^4*y^4-8+21*x*y^4+5*x^3*y^2", kXY);
  const std::vector<Rational> one = {1, 1};
  EXPECT_EQ(f.evaluate(std::span<const Rational>(one)), Rational(6));
  const auto g = parse("x^4+y^4+1-3*x*y", kXY);
  EXPECT_EQ(g.evaluate(std::span<const Rational>(one)), Rational(0));
  const std::vector<Rational> half = {Rational(1, 2), Rational(1, 2)};
  EXPECT_EQ(g.evaluate(std::span<const Rational>(half)), Rational(1, 16) + Rational(1, 16) + 1 - Rational(3, 4));
}

TEST(Evaluate, NegativePowerAtZeroThrows) {
  const auto f = Polynomial::monomial({-1, 0});
  const std::vector<Rational> p = {0, 1};
  EXPECT_THROW(f.evaluate(std::span<const Rational>(p)), std::domain_error);
}

TEST(Gradient, PowerRule) {
  EXPECT_EQ(parse("x^3*y^2", kXY).partial(0), parse("3*x^2*y^2", kXY));
  for (const auto& g : parse("5", kXY).gradient()) EXPECT_TRUE(g.is_zero());
  const auto grad = parse("x^4+y^4+1-3*x*y", kXY).gradient();
  EXPECT_EQ(grad[0], parse("4*x^3-3*y", kXY));
  EXPECT_EQ(grad[1], parse("4*y^3-3*x", kXY));
}

TEST(Gradient, MatchesFiniteDifferences) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> unit(0.2, 1.8);
  const auto f = parse("-8*y^8-4*x^4*y^4-8+21*x*y^4+5*x^3*y^2", kXY);
  const auto grad = f.gradient();
  for (int trial = 0; trial < 20; ++trial) {
    const std::vector<double> x = {unit(rng), unit(rng)};
    const auto fd = oracle::fd_gradient(f, x, 1e-6);
    for (std::size_t i = 0; i < 2; ++i) {
      const double exact = grad[i].evaluate(std::span<const double>(x));
      EXPECT_NEAR(exact, fd[i], 1e-6 * (1 + std::abs(exact)));
    }
  }
}

TEST(SquareSubstitute, DoublesExponents) {
  EXPECT_EQ(parse("x+y-2", kXY).square_substitute(), parse("x^2+y^2-2", kXY));
  EXPECT_EQ(parse("x*y^4", kXY).square_substitute(), parse("x^2*y^8", kXY));
  EXPECT_TRUE(Polynomial(2).square_substitute().is_zero());
}

TEST(Descartes, SignVariations) {
  const std::vector<std::string> x = {"x"};
  EXPECT_EQ(parse("x^2-3*x+2", x).descartes_bound(), 2);
  EXPECT_EQ(parse("x^2+1", x).descartes_bound(), 0);
  EXPECT_EQ(parse("x^3-1", x).descartes_bound(), 1);
  EXPECT_THROW(parse("x*y", kXY).descartes_bound(), std::invalid_argument);
}

TEST(Exponent, GradedLexOrder) {
  EXPECT_LT(ExponentVector({3, 0}), ExponentVector({0, 4}));
  EXPECT_LT(ExponentVector({0, 4}), ExponentVector({1, 3}));
  EXPECT_THROW(to_exponent({Rational(1, 2), Rational(1)}), std::domain_error);
}
