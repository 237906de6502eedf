#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "hestondist/errors.hpp"
#include "hestondist/rootfind.hpp"

namespace hdist {
namespace {

using std::numbers::pi;

TEST(SolveMonotone, NewtonOnCubic) {
  const auto g = [](double x) { return x * x * x; };
  const auto gp = [](double x) { return 3.0 * x * x; };
  const RootResult r = solve_monotone(g, gp, {0.0, 3.0}, 2.0);
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.root, std::cbrt(2.0), 1e-14);
  EXPECT_LT(r.iterations, 20);
}

TEST(SolveMonotone, XMinusSinReachesPi) {
  // x - sin x = pi has the root x = pi.
  const auto g = [](double x) { return x - std::sin(x); };
  const auto gp = [](double x) { return 1.0 - std::cos(x); };
  const RootResult r = solve_monotone(g, gp, {0.0, 2.0 * pi}, pi);
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.root, pi, 1e-12);
}

TEST(SolveMonotone, DerivativeFree) {
  const auto g = [](double x) { return std::exp(x); };
  const RootResult r = solve_monotone(g, nullptr, {-5.0, 5.0}, 3.0);
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.root, std::log(3.0), 1e-12);
  EXPECT_LT(r.iterations, 60);
}

TEST(SolveMonotone, DecreasingFunction) {
  const auto g = [](double x) { return 1.0 / x; };
  const auto gp = [](double x) { return -1.0 / (x * x); };
  const RootResult r = solve_monotone(g, gp, {0.01, 100.0}, 4.0);
  EXPECT_NEAR(r.root, 0.25, 1e-14);
}

TEST(SolveMonotone, ExactEndpoint) {
  const auto g = [](double x) { return 2.0 * x; };
  const RootResult r = solve_monotone(g, nullptr, {1.0, 2.0}, 2.0);
  EXPECT_EQ(r.root, 1.0);
  EXPECT_TRUE(r.converged);
}

TEST(SolveMonotone, NoSignChangeThrows) {
  const auto g = [](double x) { return x; };
  EXPECT_THROW(solve_monotone(g, nullptr, {1.0, 2.0}, 5.0), NoSignChange);
}

TEST(SolveMonotone, BadNewtonFallsBack) {
  // A wrong derivative must not break bracketing.
  const auto g = [](double x) { return std::atan(x); };
  const auto bad = [](double) { return 1e-6; };
  const RootResult r = solve_monotone(g, bad, {-10.0, 10.0}, 0.5);
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.root, std::tan(0.5), 1e-12);
}

TEST(SolverConfig, Validate) {
  SolverConfig c;
  EXPECT_NO_THROW(c.validate());
  c.max_iter = 0;
  EXPECT_THROW(c.validate(), std::invalid_argument);
}

TEST(BracketFromOpenEndpoint, FindsStraddle) {
  // g diverges at 0+; root of 1/x = 1e6.
  const auto g = [](double x) { return 1.0 / x; };
  const Bracket b = bracket_from_open_endpoint(g, 0.0, 1.0, 1e6);
  const double lo = std::min(b.lo, b.hi);
  const double hi = std::max(b.lo, b.hi);
  EXPECT_LE(lo, 1e-6);
  EXPECT_GE(hi, 1e-6);
}

TEST(BracketFromOpenEndpoint, GivesUp) {
  const auto g = [](double) { return 0.0; };
  EXPECT_THROW(bracket_from_open_endpoint(g, 0.0, 1.0, 1.0, 20), MaxIterations);
}

}  // namespace
}  // namespace hdist
