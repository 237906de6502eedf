#include "hestondist/ldpsim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>
#include <thread>

#include "hestondist/errors.hpp"
#include "hestondist/grushin.hpp"

namespace hdist {

namespace {

using std::numbers::pi;

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t path_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(splitmix64(seed) ^ splitmix64(index + 0x632BE59BD9B4E019ULL));
}

// Fixed-shape pairwise summation, so the result depends only on the data.
double pairwise_sum(const double* x, std::size_t n) {
  if (n <= 32) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += x[i];
    return s;
  }
  const std::size_t half = n / 2;
  return pairwise_sum(x, half) + pairwise_sum(x + half, n - half);
}

GrushinPoint simulate_one(const SimConfig& c, std::uint64_t index) {
  std::mt19937_64 rng(path_seed(c.seed, index));
  std::normal_distribution<double> normal;
  const double dt = c.t / c.n_steps;
  const double half_sdt = 0.5 * std::sqrt(dt);
  const double bridge = dt * dt / 24.0;
  double h = c.start.y;
  double q = 0.0;
  for (int k = 0; k < c.n_steps; ++k) {
    const double hn = h + half_sdt * normal(rng);
    q += dt * (h * h + h * hn + hn * hn) / 3.0 + bridge;
    h = hn;
  }
  GrushinPoint out;
  out.x = c.start.x + std::sqrt(q) * normal(rng);
  out.y = h;
  return out;
}

unsigned worker_count(const SimConfig& c) {
  unsigned n = c.threads != 0 ? c.threads : std::thread::hardware_concurrency();
  n = std::max(1u, n);
  return static_cast<unsigned>(
      std::min<std::int64_t>(n, std::max<std::int64_t>(1, c.n_paths / 1024)));
}

double lambda_star_value(const GrushinPoint& a, double x, double y) {
  return lambda_star(a.x, a.y, x, y).value;
}

}  // namespace

void SimConfig::validate() const {
  if (!(t > 0.0) || !std::isfinite(t)) {
    throw std::invalid_argument("SimConfig: t must be positive");
  }
  if (n_paths < 1 || n_steps < 1) {
    throw std::invalid_argument("SimConfig: n_paths and n_steps must be >= 1");
  }
}

std::vector<GrushinPoint> simulate_terminal(const SimConfig& config) {
  config.validate();
  const auto n = static_cast<std::size_t>(config.n_paths);
  std::vector<GrushinPoint> out(n);
  const unsigned workers = worker_count(config);
  if (workers == 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = simulate_one(config, i);
    return out;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::size_t block = (n + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::size_t lo = w * block;
    const std::size_t hi = std::min(n, lo + block);
    pool.emplace_back([&, lo, hi] {
      for (std::size_t i = lo; i < hi; ++i) out[i] = simulate_one(config, i);
    });
  }
  for (auto& th : pool) th.join();
  return out;
}

MomentEstimate exponential_moment_of(const std::vector<GrushinPoint>& terminal,
                                     const SimConfig& config, double delta,
                                     double gamma) {
  if (terminal.empty()) throw std::invalid_argument("no terminal points");
  const std::size_t n = terminal.size();
  std::vector<double> logw(n);
  double m = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    logw[i] = (delta * terminal[i].x + gamma * terminal[i].y) / config.t;
    m = std::max(m, logw[i]);
  }
  std::vector<double> w(n);
  std::vector<double> w2(n);
  for (std::size_t i = 0; i < n; ++i) {
    w[i] = std::exp(logw[i] - m);
    w2[i] = w[i] * w[i];
  }
  const double mean = pairwise_sum(w.data(), n) / n;
  const double mean2 = pairwise_sum(w2.data(), n) / n;
  const double var = n > 1 ? std::max(0.0, mean2 - mean * mean) * n / (n - 1) : 0.0;

  MomentEstimate out;
  const double scale = std::exp(m);
  out.estimate = scale * mean;
  out.stderr_ = scale * std::sqrt(var / n);
  if (!std::isfinite(out.estimate) || !std::isfinite(out.stderr_)) {
    throw OverflowGuard("mc_exponential_moment: weights overflow double range");
  }
  out.variance_finite = 2.0 * std::abs(delta) < pi;
  out.closed_form =
      std::abs(delta) < pi
          ? exponential_moment(config.t, delta, gamma, config.start.x, config.start.y)
          : std::numeric_limits<double>::infinity();
  return out;
}

MomentEstimate mc_exponential_moment(const SimConfig& config, double delta,
                                     double gamma) {
  return exponential_moment_of(simulate_terminal(config), config, delta, gamma);
}

BallEstimate ball_fraction(const std::vector<GrushinPoint>& terminal,
                           const BallSpec& ball) {
  if (!(ball.radius > 0.0)) throw std::invalid_argument("ball radius must be positive");
  if (terminal.empty()) throw std::invalid_argument("no terminal points");
  BallEstimate out;
  for (const auto& p : terminal) {
    if (std::hypot(p.x - ball.center.x, p.y - ball.center.y) <= ball.radius) ++out.hits;
  }
  const double n = static_cast<double>(terminal.size());
  out.p_hat = out.hits / n;
  out.stderr_ = std::sqrt(out.p_hat * (1.0 - out.p_hat) / n);
  out.zero_hits = out.hits == 0;
  return out;
}

BallEstimate estimate_ball_probability(const SimConfig& config, const BallSpec& ball) {
  return ball_fraction(simulate_terminal(config), ball);
}

bool ball_inside_region_M(const GrushinPoint& start, const BallSpec& ball) {
  constexpr int kRadial = 20;
  constexpr int kAngular = 360;
  for (int i = 0; i <= kRadial; ++i) {
    const double r = ball.radius * i / kRadial;
    for (int j = 0; j < kAngular; ++j) {
      const double th = 2.0 * pi * j / kAngular;
      if (!in_region_M(start.x, start.y, ball.center.x + r * std::cos(th),
                       ball.center.y + r * std::sin(th))) {
        return false;
      }
    }
  }
  return true;
}

double inf_lambda_star_over_ball(const GrushinPoint& start, const BallSpec& ball) {
  if (!(ball.radius > 0.0)) throw std::invalid_argument("ball radius must be positive");
  const double cx = ball.center.x;
  const double cy = ball.center.y;
  if (std::hypot(start.x - cx, start.y - cy) <= ball.radius) return 0.0;

  constexpr int kRadial = 40;
  constexpr int kAngular = 180;
  double r_lo = 0.0;
  double r_hi = ball.radius;
  double th_lo = 0.0;
  double th_hi = 2.0 * pi;
  double best = std::numeric_limits<double>::infinity();
  double best_r = 0.0;
  double best_th = 0.0;
  for (int round = 0; round < 3; ++round) {
    const double dr = (r_hi - r_lo) / kRadial;
    const double dth = (th_hi - th_lo) / kAngular;
    for (int i = 0; i <= kRadial; ++i) {
      const double r = r_lo + i * dr;
      for (int j = 0; j <= kAngular; ++j) {
        const double th = th_lo + j * dth;
        const double val =
            lambda_star_value(start, cx + r * std::cos(th), cy + r * std::sin(th));
        if (val < best) {
          best = val;
          best_r = r;
          best_th = th;
        }
      }
    }
    r_lo = std::max(0.0, best_r - 2.0 * dr);
    r_hi = std::min(ball.radius, best_r + 2.0 * dr);
    th_lo = best_th - 2.0 * dth;
    th_hi = best_th + 2.0 * dth;
  }
  return best;
}

std::vector<TrendRow> ldp_trend_report(const GrushinPoint& start, const BallSpec& ball,
                                       const std::vector<double>& t_grid,
                                       std::int64_t n_paths, int n_steps,
                                       std::uint64_t seed, unsigned threads) {
  const double inf_rate = inf_lambda_star_over_ball(start, ball);
  std::vector<TrendRow> rows;
  rows.reserve(t_grid.size());
  for (double t : t_grid) {
    SimConfig cfg;
    cfg.t = t;
    cfg.n_paths = n_paths;
    cfg.n_steps = n_steps;
    cfg.seed = seed;
    cfg.start = start;
    cfg.threads = threads;
    TrendRow row;
    row.t = t;
    row.ball = estimate_ball_probability(cfg, ball);
    row.minus_inf_lambda_star = -inf_rate;
    if (!row.ball.zero_hits) {
      row.t_log_p = t * std::log(row.ball.p_hat);
      row.gap = std::abs(*row.t_log_p + inf_rate);
      if (inf_rate > 0.0) row.relative_gap = *row.gap / inf_rate;
    }
    rows.push_back(row);
  }
  return rows;
}

bool gaps_decreasing(const std::vector<TrendRow>& rows) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i].gap) return false;
    if (i > 0 && !(*rows[i].gap < *rows[i - 1].gap)) return false;
  }
  return true;
}

}  // namespace hdist
