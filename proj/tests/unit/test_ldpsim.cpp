#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "hestondist/errors.hpp"
#include "hestondist/grushin.hpp"
#include "hestondist/ldpsim.hpp"

namespace hdist {
namespace {

using std::numbers::pi;

SimConfig small_config(unsigned threads) {
  SimConfig c;
  c.t = 0.5;
  c.n_paths = 5000;
  c.n_steps = 50;
  c.seed = 17;
  c.start = GrushinPoint(0.2, 0.7);
  c.threads = threads;
  return c;
}

TEST(Simulate, ThreadCountDoesNotChangeResults) {
  const auto a = simulate_terminal(small_config(1));
  const auto b = simulate_terminal(small_config(4));
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i], b[i]);
}

TEST(Simulate, SeedChangesPaths) {
  SimConfig c = small_config(1);
  const auto a = simulate_terminal(c);
  c.seed = 18;
  const auto b = simulate_terminal(c);
  EXPECT_NE(a.front(), b.front());
}

TEST(Simulate, HasExactMarginalOfH) {
  SimConfig c = small_config(0);
  c.n_paths = 40000;
  const auto pts = simulate_terminal(c);
  double m = 0.0, s2 = 0.0;
  for (const auto& p : pts) m += p.y;
  m /= pts.size();
  for (const auto& p : pts) s2 += (p.y - m) * (p.y - m);
  s2 /= pts.size() - 1;
  // H_t ~ N(y0, t/4).
  EXPECT_NEAR(m, 0.7, 4.0 * std::sqrt(0.125 / pts.size()));
  EXPECT_NEAR(s2, 0.125, 0.01);
}

TEST(Simulate, ValidatesConfig) {
  SimConfig c;
  c.t = 0.0;
  EXPECT_THROW(simulate_terminal(c), std::invalid_argument);
  c.t = 1.0;
  c.n_paths = 0;
  EXPECT_THROW(simulate_terminal(c), std::invalid_argument);
}

TEST(Moment, ClosedFormAndFlags) {
  SimConfig c = small_config(0);
  c.n_paths = 20000;
  const MomentEstimate m = mc_exponential_moment(c, 0.5, 0.3);
  EXPECT_TRUE(m.variance_finite);
  EXPECT_NEAR(m.closed_form, exponential_moment(0.5, 0.5, 0.3, 0.2, 0.7), 1e-15);
  EXPECT_LT(std::abs(m.estimate - m.closed_form), 4.0 * m.stderr_);

  const MomentEstimate heavy = mc_exponential_moment(c, 2.0, 0.0);
  EXPECT_FALSE(heavy.variance_finite);
  const MomentEstimate outside = mc_exponential_moment(c, 4.0, 0.0);
  EXPECT_TRUE(std::isinf(outside.closed_form));
}

TEST(Moment, OverflowGuard) {
  SimConfig c = small_config(1);
  c.t = 1e-3;
  c.n_steps = 4;
  c.n_paths = 100;
  EXPECT_THROW(mc_exponential_moment(c, 1.0, 1e300), OverflowGuard);
}

TEST(Ball, FractionAndStderr) {
  const std::vector<GrushinPoint> pts{{0, 0}, {0.5, 0}, {2, 2}, {0, 1}};
  BallSpec ball;
  ball.center = GrushinPoint(0, 0);
  ball.radius = 1.0;
  const BallEstimate e = ball_fraction(pts, ball);
  EXPECT_EQ(e.hits, 3);
  EXPECT_DOUBLE_EQ(e.p_hat, 0.75);
  EXPECT_DOUBLE_EQ(e.stderr_, std::sqrt(0.75 * 0.25 / 4));
  ball.center = GrushinPoint(10, 10);
  EXPECT_TRUE(ball_fraction(pts, ball).zero_hits);
}

TEST(Ball, InfLambdaStar) {
  BallSpec ball;
  ball.center = GrushinPoint(0.0, 2.0);
  ball.radius = 0.5;
  // Closest point (0, 1.5) on the vertical line: 2 (y1 - y0)^2 = 0.5.
  EXPECT_NEAR(inf_lambda_star_over_ball(GrushinPoint(0, 1), ball), 0.5, 1e-6);
  ball.center = GrushinPoint(0.1, 1.1);
  EXPECT_EQ(inf_lambda_star_over_ball(GrushinPoint(0, 1), ball), 0.0);
}

TEST(Ball, InsideRegionM) {
  BallSpec ball;
  ball.center = GrushinPoint(0.0, 1.5);
  ball.radius = 0.1;
  EXPECT_TRUE(ball_inside_region_M(GrushinPoint(0, 1), ball));
  ball.center = GrushinPoint(6.0, 1.0);
  EXPECT_FALSE(ball_inside_region_M(GrushinPoint(0, 1), ball));
}

TEST(Trend, RowsAndGaps) {
  BallSpec ball;
  ball.center = GrushinPoint(0.0, 1.5);
  ball.radius = 0.1;
  const auto rows = ldp_trend_report(GrushinPoint(0, 1), ball, {0.4, 0.2}, 20000, 50, 3, 0);
  ASSERT_EQ(rows.size(), 2u);
  for (const auto& r : rows) {
    EXPECT_NEAR(r.minus_inf_lambda_star, -0.32, 1e-6);
    ASSERT_TRUE(r.t_log_p);
    ASSERT_TRUE(r.gap);
    EXPECT_DOUBLE_EQ(*r.gap, std::abs(*r.t_log_p - r.minus_inf_lambda_star));
  }
}

TEST(Trend, GapsDecreasing) {
  std::vector<TrendRow> rows(3);
  rows[0].gap = 0.5;
  rows[1].gap = 0.3;
  rows[2].gap = 0.1;
  EXPECT_TRUE(gaps_decreasing(rows));
  rows[2].gap = 0.4;
  EXPECT_FALSE(gaps_decreasing(rows));
  rows[2].gap.reset();
  EXPECT_FALSE(gaps_decreasing(rows));
}

}  // namespace
}  // namespace hdist
