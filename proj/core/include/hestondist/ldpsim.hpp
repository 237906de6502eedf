#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hestondist/core.hpp"

namespace hdist {

struct SimConfig {
  double t = 1.0;
  std::int64_t n_paths = 100000;
  int n_steps = 400;
  std::uint64_t seed = 0;
  GrushinPoint start;
  /// Worker threads; 0 uses the hardware concurrency. Results do not depend
  /// on this value.
  unsigned threads = 0;

  void validate() const;
};

struct BallSpec {
  GrushinPoint center;
  double radius = 1.0;
};

/// Terminal points of dG = H dW, dH = dZ / 2 at time t. H is sampled exactly
/// on the time grid; G_t - x0 is drawn as a centred Gaussian whose variance
/// is the grid estimate of the integral of H^2 (the Brownian-bridge mean on
/// each step). Path i uses its own generator seeded from (seed, i).
std::vector<GrushinPoint> simulate_terminal(const SimConfig& config);

struct MomentEstimate {
  double estimate = 0.0;
  double stderr_ = 0.0;
  double closed_form = 0.0;
  /// False when 2|delta| >= pi: the weights then have infinite variance and
  /// the standard error is not meaningful.
  bool variance_finite = true;
};

/// Monte Carlo average of exp((delta G_t + gamma H_t) / t) next to its closed
/// form. Throws OverflowGuard if the average is not representable.
MomentEstimate mc_exponential_moment(const SimConfig& config, double delta,
                                     double gamma);
MomentEstimate exponential_moment_of(const std::vector<GrushinPoint>& terminal,
                                     const SimConfig& config, double delta,
                                     double gamma);

struct BallEstimate {
  double p_hat = 0.0;
  double stderr_ = 0.0;
  std::int64_t hits = 0;
  bool zero_hits = false;
};

BallEstimate estimate_ball_probability(const SimConfig& config, const BallSpec& ball);
BallEstimate ball_fraction(const std::vector<GrushinPoint>& terminal,
                           const BallSpec& ball);

/// Whether the closed ball lies inside the region M of the start point,
/// checked on a polar grid (boundary circle included).
bool ball_inside_region_M(const GrushinPoint& start, const BallSpec& ball);

/// inf of Lambda*(start -> .) over the closed ball, by a polar grid with two
/// local refinements.
double inf_lambda_star_over_ball(const GrushinPoint& start, const BallSpec& ball);

struct TrendRow {
  double t = 0.0;
  BallEstimate ball;
  std::optional<double> t_log_p;  ///< empty on zero hits
  double minus_inf_lambda_star = 0.0;
  std::optional<double> gap;           ///< |t log p + inf Lambda*|
  std::optional<double> relative_gap;  ///< gap / inf Lambda*
};

std::vector<TrendRow> ldp_trend_report(const GrushinPoint& start, const BallSpec& ball,
                                       const std::vector<double>& t_grid,
                                       std::int64_t n_paths, int n_steps = 400,
                                       std::uint64_t seed = 0, unsigned threads = 0);

/// True when every gap is present and each is below the previous one.
bool gaps_decreasing(const std::vector<TrendRow>& rows);

}  // namespace hdist
