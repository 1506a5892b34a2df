#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "birch/expsum.hpp"
#include "birch/numeric.hpp"

using namespace birch;

namespace {
const std::vector<std::string> kXY = {"x", "y"};
Polynomial P(const std::string& s) { return parse(s, kXY); }
}  // namespace

TEST(ExpSum, GradientAndHessianMatchFiniteDifferences) {
  const ExpSum g(P("x^4 + y^4 + 1 - 3*x*y + 2*x^3*y^2"));
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> p = {u(rng), u(rng)}, grad(2), hess(4);
    g.value_and_gradient(p, grad);
    g.hessian(p, hess);
    for (std::size_t i = 0; i < 2; ++i) {
      auto hi = p, lo = p;
      hi[i] += 1e-6;
      lo[i] -= 1e-6;
      const double fd = (g.value(hi) - g.value(lo)) / 2e-6;
      EXPECT_NEAR(grad[i], fd, 1e-6 * (1 + std::abs(fd)));
      std::vector<double> gh(2), gl(2);
      g.value_and_gradient(hi, gh);
      g.value_and_gradient(lo, gl);
      for (std::size_t j = 0; j < 2; ++j) EXPECT_NEAR(hess[2 * j + i], (gh[j] - gl[j]) / 2e-6, 1e-5 * (1 + std::abs(hess[2 * j + i])));
    }
  }
}

TEST(Minimize, CornerSimplexMinimum) {
  const auto out = minimize_on_orthant(P("x^4 + y^4 + 1 - 3*x*y"));
  const auto& best = out.best_run();
  EXPECT_NEAR(best.value_or_residual, -0.125, 1e-9);
  EXPECT_NEAR(best.point[0], std::sqrt(3.0) / 2, 1e-6);
  EXPECT_NEAR(best.point[1], std::sqrt(3.0) / 2, 1e-6);
  EXPECT_EQ(out.runs.size(), 33u);  // one term start plus 32 random starts
}

TEST(Solve, LinearSanity) {
  const auto roots = solve_system({P("x - 2"), P("y - 3")});
  ASSERT_EQ(roots.size(), 1u);
  EXPECT_NEAR(roots[0].point[0], 2.0, 1e-9);
  EXPECT_NEAR(roots[0].point[1], 3.0, 1e-9);
}

TEST(Solve, DeterministicUnderSeed) {
  const std::vector<Polynomial> sys = {P("-8*y^8-4*x^4*y^4-8+21*x*y^4+5*x^3*y^2"),
                                       P("-8*x^8-4*x^4*y^4-8+12*x*y^4+6*x^3*y^2")};
  const auto a = solve_system(sys), b = solve_system(sys);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].point, b[i].point);
  for (const auto& r : a) EXPECT_LT(scaled_residual(sys, r.point), 1e-9);
}

TEST(Solve, NoPositiveRoot) {
  EXPECT_TRUE(solve_system({P("x + 1"), P("y + 1")}).empty());
}

TEST(Threshold, SupModeCornerSimplex) {
  ThresholdQuery q;
  q.outer = {{{4, 0}, 1}, {{0, 4}, 1}, {{0, 0}, 1}};
  q.gamma = {1, 1};
  q.mode = ThresholdMode::Sup;
  const auto r = estimate_threshold(q);
  EXPECT_LE(r.hi - r.lo, 1e-4);
  EXPECT_LE(r.lo, 2 * std::sqrt(2.0));
  EXPECT_GE(r.hi, 2 * std::sqrt(2.0));
  ASSERT_TRUE(r.near_zero.has_value());
  EXPECT_NEAR(r.near_zero->value_or_residual, 0.0, 1e-3);
}

TEST(Threshold, InfModeWithoutInnerTermsIsZero) {
  ThresholdQuery q;
  q.outer = {{{4, 0}, 1}, {{0, 4}, 1}, {{0, 0}, 1}};
  q.gamma = {4, 4};
  q.mode = ThresholdMode::Inf;
  const auto r = estimate_threshold(q);
  EXPECT_EQ(r.lo, 0.0);
  EXPECT_EQ(r.hi, 0.0);
}

TEST(Threshold, InfModeFindsCircuitBound) {
  // f_d = 1 + x^4 + d*y^4 - 2*x*y has circuit number 2*sqrt(2)*d^(1/4), so d* = 1/4.
  ThresholdQuery q;
  q.outer = {{{4, 0}, 1}, {{0, 0}, 1}};
  q.inner = {{{1, 1}, 2}};
  q.gamma = {0, 4};
  q.mode = ThresholdMode::Inf;
  const auto r = estimate_threshold(q);
  EXPECT_LE(r.lo, 0.25 + 1e-9);
  EXPECT_GE(r.hi, 0.25 - 1e-9);
  EXPECT_LE(r.hi - r.lo, 1e-4);
}

TEST(Threshold, SupModeRejectsNegativeBase) {
  ThresholdQuery q;
  q.outer = {{{4, 0}, 1}, {{0, 4}, 1}, {{0, 0}, 1}};
  q.inner = {{{1, 1}, 3}};
  q.gamma = {2, 1};
  EXPECT_THROW(estimate_threshold(q), std::invalid_argument);
}
