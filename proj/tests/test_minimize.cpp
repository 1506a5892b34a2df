#include <gtest/gtest.h>

#include <cmath>

#include "birch/minimize.hpp"

using namespace birch;

namespace {
const std::vector<std::string> kXY = {"x", "y"};
Polynomial P(const std::string& s) { return parse(s, kXY); }
}

TEST(CheckAndMinimize, InteriorMinimizer) {
  const auto r = check_and_minimize(P("x^4 + y^4 + 1 - 3*x*y"));
  ASSERT_EQ(r.conclusion, MinimizeConclusion::HasGlobalMinimizerInOrthant);
  EXPECT_NEAR(*r.value, -0.125, 1e-8);
  EXPECT_NEAR((*r.minimizer)[0], std::sqrt(3.0) / 2, 1e-5);
  EXPECT_NEAR((*r.minimizer)[1], std::sqrt(3.0) / 2, 1e-5);
  for (const auto& h : r.hypotheses) EXPECT_NE(h.status, HypothesisStatus::Fail) << h.name;
}

TEST(CheckAndMinimize, NonnegativeButBelowTheOrigin) {
  // f >= 0 on the orthant, yet f(t,t) = 2t^4 - 2t^2 + 1 dips to 1/2 < f(0).
  const auto r = check_and_minimize(P("x^4 + y^4 + 1 - 2*x*y"));
  ASSERT_EQ(r.conclusion, MinimizeConclusion::HasGlobalMinimizerInOrthant);
  EXPECT_TRUE(r.below_origin.has_value());
  EXPECT_NEAR(*r.value, 0.5, 1e-8);
}

TEST(CheckAndMinimize, NothingBelowTheOrigin) {
  // f - f(0) >= x^4 + y^4 - x^2*y^2 >= 0 by AM-GM.
  const auto r = check_and_minimize(P("1 + x^4 + y^4 + x^4*y^4 - x^2*y^2"));
  EXPECT_EQ(r.conclusion, MinimizeConclusion::OriginIsMinimizer);
  EXPECT_FALSE(r.below_origin.has_value());
}

TEST(CheckAndMinimize, NoNegativeTerms) {
  EXPECT_EQ(check_and_minimize(P("x^2 + y^2")).conclusion, MinimizeConclusion::OriginIsMinimizer);
}

TEST(CheckAndMinimize, OddOuterUsesSquareSubstitution) {
  // x^3 + y^3 + 1 >= 3xy with equality at (1,1).
  const auto r = check_and_minimize(P("x^3 + y^3 + 1 - 3*x*y"));
  ASSERT_EQ(r.conclusion, MinimizeConclusion::HasGlobalMinimizerInOrthant);
  EXPECT_NEAR(*r.value, 0.0, 1e-8);
  EXPECT_NEAR((*r.minimizer)[0], 1.0, 1e-3);
  EXPECT_NEAR((*r.minimizer)[1], 1.0, 1e-3);
}

TEST(CheckAndMinimize, UnboundedBelowIsNotCertified) {
  const auto r = check_and_minimize(P("x^2 + y^2 + 1 - 3*x*y"));
  EXPECT_NE(r.conclusion, MinimizeConclusion::HasGlobalMinimizerInOrthant);
}
