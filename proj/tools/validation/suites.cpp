#include "suites.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "hestondist/cregime.hpp"
#include "hestondist/deltaregime.hpp"
#include "hestondist/distance.hpp"
#include "hestondist/geodesic.hpp"
#include "hestondist/grushin.hpp"
#include "oracles.hpp"

namespace hdist::validation {

namespace {

using std::numbers::pi;

double rel_err(double got, double want, double floor = 1e-12) {
  return std::abs(got - want) / std::max(std::abs(want), floor);
}

// Collects per-case errors and failures for one suite.
class Tally {
 public:
  Tally(std::string name, double tol) {
    r_.name = std::move(name);
    r_.tolerance = tol;
  }

  void check(double err, bool ok) {
    ++r_.cases;
    if (std::isfinite(err)) r_.max_error = std::max(r_.max_error, err);
    if (!ok) ++r_.failures;
  }
  void check_error(double err) { check(err, err <= r_.tolerance); }
  void fail(const std::string& why) {
    ++r_.cases;
    ++r_.failures;
    if (first_problem_.empty()) first_problem_ = why;
  }
  void note(const std::string& n) { r_.note = n; }

  // Runs body for one case, turning exceptions into failures.
  void guarded(const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      fail(e.what());
    }
  }

  SuiteResult done() {
    r_.passed = r_.failures == 0;
    if (!first_problem_.empty()) {
      r_.note += (r_.note.empty() ? "" : "; ") + ("first error: " + first_problem_);
    }
    return r_;
  }

 private:
  SuiteResult r_;
  std::string first_problem_;
};

// v in [0, v_max]: uniform most of the time, log-uniform down to 1e-8 otherwise
// so that tiny variances are exercised.
double draw_variance(std::mt19937_64& rng, double v_max) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  if (u(rng) < 0.75) return v_max * u(rng);
  return std::exp(std::log(1e-8) + u(rng) * (std::log(v_max) - std::log(1e-8)));
}

double distance(const PairSample& s, Method m) {
  return heston_distance({s.x0, s.v0}, {s.x1, s.v1}, m).value;
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(3);
  os << x;
  return os.str();
}

}  // namespace

std::vector<PairSample> random_pairs(long n, std::uint64_t seed, double v_max,
                                     double dx_max) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ux(-10.0, 10.0);
  std::uniform_real_distribution<double> udx(-dx_max, dx_max);
  std::vector<PairSample> out;
  out.reserve(static_cast<std::size_t>(std::max(0L, n)));
  for (long i = 0; i < n; ++i) {
    PairSample s;
    s.x0 = ux(rng);
    s.v0 = draw_variance(rng, v_max);
    s.x1 = s.x0 + udx(rng);
    s.v1 = draw_variance(rng, v_max);
    out.push_back(s);
  }
  return out;
}

SuiteResult worked_examples() {
  Tally t("worked_examples", 1e-12);
  auto expect = [&](double got, double want, double tol = 1e-12) {
    const double e = rel_err(got, want);
    t.check(e, e <= tol);
  };
  auto both = [&](double x0, double v0, double x1, double v1, double want) {
    t.guarded([&] {
      expect(heston_distance({x0, v0}, {x1, v1}, Method::C).value, want);
      expect(heston_distance({x0, v0}, {x1, v1}, Method::Delta).value, want);
    });
  };
  t.guarded([&] {
    both(0, 0, 1, 0, 2.0 * std::sqrt(pi));
    both(0, 1, 0, 4, 2.0);
    both(0, 1, 1, 4, 2.1040424239716155018);
    both(0, 1, 10, 4, 6.1766226146989802360);
    both(0, 1, 10, 1, 7.4216985445763865882);
    both(0, 1, 5, 1, 4.3422615231803522951);

    const CanonicalPair close = canonicalize({0, 1}, {1, 4});
    expect(solve_C_close(close).root, 0.20219818774654373000);
    expect(solve_delta(close).root, 0.42543356506890567319);
    const CanonicalPair far = canonicalize({0, 1}, {10, 1});
    expect(solve_C_far(far).root, 0.53948408642970243764);
    expect(solve_delta(far).root, 4.0038882590774441318);
    expect(solve_C_far(canonicalize({0, 1}, {10, 4})).root, 0.46781274348374376687);

    expect(fbar(1.0, 1e-6), 6.666666666668666666666667737994e-7);
    expect(F(1.0, 4.0, 0.5), 5.920841012355268278);
    expect(Ftilde(1.0, 1.0, 0.5), 11.841682024710536556);
    expect(f_delta(pi, 1.0, 1.0), pi + 2.0);
    expect(bound_D({0, 1}, {0, 4}), 0.63397459621556135324);
    expect(C_of_delta(1.5 * pi, 1.0, 1.0), 0.38268343236508977173);
    expect(heston_distance({0, 2}, {2, 8}).value, 2.9755653317890203565);

    expect(lambda_star(0, 1, 0, 2).value, 2.0);
    expect(lambda_star(0, 0, 1, 0).value, pi);
    expect(grushin_distance({0, 1}, {0, -1}).value, 4.0);

    const GeodesicPath arch = geodesic_path(HestonPoint(0, 0), HestonPoint(1, 0), 11);
    expect(arch.apex->x, 0.5);
    expect(arch.apex->v, 1.0 / pi);
  });
  return t.done();
}

SuiteResult cross_route(long n, std::uint64_t seed) {
  Tally t("cross_route", 1e-9);
  for (const auto& s : random_pairs(n, seed)) {
    t.guarded([&] {
      const double dc = distance(s, Method::C);
      const double dd = distance(s, Method::Delta);
      t.check_error(std::abs(dc - dd) / std::max(dd, 1e-12));
    });
  }
  return t.done();
}

SuiteResult two_sided_bound(long n, std::uint64_t seed) {
  Tally t("two_sided_bound", 0.0);
  double worst_low = 0.0;
  double worst_high = 0.0;
  for (const auto& s : random_pairs(n, seed)) {
    t.guarded([&] {
      const double d = distance(s, Method::Delta);
      const double D = bound_D({s.x0, s.v0}, {s.x1, s.v1});
      const bool ok = D <= d && d <= 12.0 * D;
      if (D > 0.0) {
        worst_low = std::max(worst_low, D / d);
        worst_high = std::max(worst_high, d / (12.0 * D));
      }
      t.check(ok ? 0.0 : 1.0, ok);
    });
  }
  t.note("max D/d = " + fmt(worst_low) + ", max d/(12D) = " + fmt(worst_high));
  return t.done();
}

SuiteResult symmetry_scaling(long n, std::uint64_t seed) {
  Tally t("symmetry_scaling", 1e-10);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> ix(-20480, 20480);
  std::uniform_int_distribution<int> iv(0, 10240);
  std::uniform_int_distribution<int> ia(-100, 100);
  for (long i = 0; i < n; ++i) {
    // Dyadic coordinates so that translations are exact in floating point.
    const double x0 = ix(rng) / 1024.0;
    const double x1 = ix(rng) / 1024.0;
    const double v0 = iv(rng) / 1024.0;
    const double v1 = iv(rng) / 1024.0;
    const double a = ia(rng);
    t.guarded([&] {
      const double d = heston_distance({x0, v0}, {x1, v1}).value;
      const double dt = heston_distance({x0 + a, v0}, {x1 + a, v1}).value;
      t.check(dt == d ? 0.0 : rel_err(dt, d), dt == d);
      for (double alpha : {0.25, 4.0}) {
        const double ds =
            heston_distance(scale({x0, v0}, alpha), scale({x1, v1}, alpha)).value;
        t.check_error(rel_err(ds, std::sqrt(alpha) * d));
      }
      t.check_error(rel_err(heston_distance({x1, v0}, {x0, v1}).value, d));
      t.check_error(rel_err(heston_distance({x0, v1}, {x1, v0}).value, d));
    });
  }
  return t.done();
}

SuiteResult monotonicity(long n, std::uint64_t seed) {
  Tally t("monotonicity_convexity", 0.0);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uv(1e-3, 10.0);
  constexpr int kGrid = 200;
  for (long i = 0; i < n; ++i) {
    double v0 = uv(rng);
    double v1 = uv(rng);
    if (v0 > v1) std::swap(v0, v1);
    if (v0 == v1) continue;
    t.guarded([&] {
      const double c_max = 1.0 / std::sqrt(v1);
      std::vector<double> fc(kGrid + 1), ft(kGrid + 1), fd(kGrid + 1);
      for (int k = 0; k <= kGrid; ++k) {
        const double C = c_max * k / kGrid;
        fc[k] = F(v0, v1, C);
        ft[k] = k == 0 ? 0.0 : Ftilde(v0, v1, C);
        fd[k] = f_delta(2.0 * pi * k / (kGrid + 1), v0, v1);
      }
      bool ok = true;
      for (int k = 1; k <= kGrid; ++k) {
        ok = ok && fc[k] > fc[k - 1] && fd[k] > fd[k - 1];
        if (k >= 2) ok = ok && ft[k] < ft[k - 1];
        if (k + 1 <= kGrid) {
          ok = ok && fc[k + 1] - 2.0 * fc[k] + fc[k - 1] > 0.0;
          ok = ok && fd[k + 1] - 2.0 * fd[k] + fd[k - 1] > 0.0;
        }
      }
      t.check(ok ? 0.0 : 1.0, ok);
    });
  }
  t.note("F, Ftilde, f sampled on 200-point grids");
  return t.done();
}

SuiteResult delta_far_implies_c_far(long n, std::uint64_t seed) {
  Tally t("delta_far_implies_c_far", 1e-9);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  long counterexamples = 0;
  for (long i = 0; i < n; ++i) {
    const double v0 = draw_variance(rng, 10.0);
    const double v1 = draw_variance(rng, 10.0);
    const double thr = delta_threshold(v0, v1);
    const double dx = thr * std::exp(1e-6 + u(rng) * std::log(20.0)) + 1e-9;
    t.guarded([&] {
      const CanonicalPair pair = canonicalize({0.0, v0}, {dx, v1});
      if (classify_delta(pair).kind != DeltaKind::DeltaFar) {
        t.fail("sampled pair is not delta-far");
        return;
      }
      if (classify_C(pair).kind != CKind::CFar) {
        ++counterexamples;
        t.fail("delta-far pair that is not C-far");
        return;
      }
      if (pair.v_max() == 0.0) {
        t.check(0.0, true);
        return;
      }
      const DeltaWeights w = DeltaWeights::heston(pair.v_min(), pair.v_max());
      const DeltaRoot root = solve_delta_equation(w, pair.dx());
      const double c_from_delta = C_of_delta_complement(root.complement, w);
      t.check_error(rel_err(c_from_delta, solve_C_far(pair).root));
    });
  }
  t.note("counterexamples: " + std::to_string(counterexamples));
  return t.done();
}

SuiteResult lambda_gradient(int grid_n) {
  Tally t("lambda_gradient", 1e-6);
  const double starts[][2] = {{0.0, 0.0}, {0.3, 1.0}, {-1.0, -0.7}, {2.0, 2.5}};
  for (const auto& st : starts) {
    const double x0 = st[0];
    const double y0 = st[1];
    for (int i = 0; i < grid_n; ++i) {
      const double d = -0.95 * pi + 1.9 * pi * i / (grid_n - 1);
      for (int j = 0; j < grid_n; ++j) {
        const double g = -10.0 + 20.0 * j / (grid_n - 1);
        t.guarded([&] {
          const auto [gd, gg] = grad_lambda(d, g, x0, y0);
          const double hd = 1e-6 * std::max(1.0, std::abs(d));
          const double hg = 1e-6 * std::max(1.0, std::abs(g));
          const double fd = (lambda(d + hd, g, x0, y0) - lambda(d - hd, g, x0, y0)) / (2 * hd);
          const double fg = (lambda(d, g + hg, x0, y0) - lambda(d, g - hg, x0, y0)) / (2 * hg);
          t.check_error(std::abs(fd - gd) / std::max(1.0, std::abs(gd)));
          t.check_error(std::abs(fg - gg) / std::max(1.0, std::abs(gg)));
        });
      }
    }
  }
  t.note("error = |fd - exact| / max(1, |exact|), four start points");
  return t.done();
}

namespace {

struct Quad {
  double x0, y0, x1, y1;
};

// y in [-2, 2]; dx a fraction of the threshold (close) or beyond it (far).
std::vector<Quad> random_quads(long n, std::uint64_t seed, bool far, bool same_sign) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uy(-2.0, 2.0);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<Quad> out;
  while (static_cast<long>(out.size()) < n) {
    Quad q;
    q.x0 = 2.0 * u(rng) - 1.0;
    q.y0 = uy(rng);
    q.y1 = uy(rng);
    if (same_sign && q.y0 * q.y1 < 0.0) q.y1 = -q.y1;
    const double thr = grushin_threshold(q.y0, q.y1);
    if (!(thr > 0.0)) continue;
    const double sign = u(rng) < 0.5 ? -1.0 : 1.0;
    const double frac = far ? 1.0 + 1e-3 + 2.0 * u(rng) : 0.95 * u(rng);
    q.x1 = q.x0 + sign * frac * thr;
    out.push_back(q);
  }
  return out;
}

}  // namespace

SuiteResult lambda_star_oracle_close(long n, std::uint64_t seed) {
  Tally t("lambda_star_oracle_close", 1e-6);
  for (const auto& q : random_quads(n, seed, false, false)) {
    t.guarded([&] {
      const RateFunctionResult rs = lambda_star(q.x0, q.y0, q.x1, q.y1);
      const GridSupResult grid = lambda_star_grid(q.x0, q.y0, q.x1, q.y1);
      t.check_error(rel_err(grid.value(), rs.value));
    });
  }
  return t.done();
}

SuiteResult lambda_star_oracle_far(long n, std::uint64_t seed) {
  Tally t("lambda_star_oracle_far", 1e-6);
  double worst_gap = 0.0;
  for (const auto& q : random_quads(n, seed, true, false)) {
    t.guarded([&] {
      const RateFunctionResult rs = lambda_star(q.x0, q.y0, q.x1, q.y1);
      const GridSupResult grid = lambda_star_grid(q.x0, q.y0, q.x1, q.y1);
      const double excess = (grid.value() - rs.value) / std::max(1.0, rs.value);
      const double gap0 = rs.R1 - grid.stages[0];
      const double gap2 = rs.R1 - grid.stages[2];
      worst_gap = std::max(worst_gap, gap2 / std::max(1.0, rs.R1));
      const bool ok = excess <= 1e-6 && gap2 <= gap0;
      t.check(std::max(0.0, excess), ok);
    });
  }
  t.note("max relative distance of the refined sup below R1: " + fmt(worst_gap));
  return t.done();
}

SuiteResult half_d2_inside_M(long n, std::uint64_t seed) {
  Tally t("half_d2_equals_lambda_star", 1e-9);
  for (const auto& q : random_quads(n, seed, false, true)) {
    t.guarded([&] {
      const HalfD2Comparison c = half_d2_vs_lambda_star(q.x0, q.y0, q.x1, q.y1);
      const double e = rel_err(c.half_d2, c.lambda_star);
      t.check(e, e <= 1e-9 && c.relation == HalfD2Relation::Equal);
    });
  }
  return t.done();
}

SuiteResult half_d2_far(long n, std::uint64_t seed) {
  Tally t("half_d2_exceeds_lambda_star", 0.0);
  double min_gap = std::numeric_limits<double>::infinity();
  auto quads = random_quads(n, seed, true, true);
  // A few boundary pairs as well.
  for (long i = 0; i < std::min(n, 10L); ++i) quads.push_back({0.0, 0.0, 0.5 + i, 0.0});
  for (const auto& q : quads) {
    t.guarded([&] {
      const HalfD2Comparison c = half_d2_vs_lambda_star(q.x0, q.y0, q.x1, q.y1);
      const double gap = c.half_d2 - c.lambda_star;
      min_gap = std::min(min_gap, gap / c.lambda_star);
      t.check(0.0, gap > 0.0 && c.relation == HalfD2Relation::StrictlyGreater);
    });
  }
  t.note("min relative excess of d^2/2 over Lambda*: " + fmt(min_gap));
  return t.done();
}

SuiteResult geodesic_quadrature(long n, std::uint64_t seed) {
  Tally t("geodesic_quadrature", 1e-6);
  for (const auto& s : random_pairs(n, seed)) {
    if (s.x0 == s.x1 && s.v0 == s.v1) continue;
    t.guarded([&] {
      const GeodesicPath path = geodesic_path(HestonPoint(s.x0, s.v0),
                                              HestonPoint(s.x1, s.v1), 3);
      t.check_error(rel_err(path.length_quadrature, path.length_closed_form));
      const double scale = 1.0 + std::abs(s.x1 - s.x0) + s.v0 + s.v1;
      const auto& a = path.samples.front();
      const auto& b = path.samples.back();
      const double end_err =
          std::max({std::abs(a.x - s.x0), std::abs(a.v - s.v0), std::abs(b.x - s.x1),
                    std::abs(b.v - s.v1)}) / scale;
      if (end_err > 1e-10) t.fail("endpoint mismatch " + fmt(end_err));
    });
  }
  return t.done();
}

SuiteResult polyline_order() {
  Tally t("polyline_order", 1.9);
  const double pairs[][4] = {{0, 1, 1, 4},   {0, 1, 10, 4}, {0, 1, 10, 1}, {0, 0, 1, 0},
                             {0, 0.5, 3, 2}, {0, 2, 0.1, 2.5}, {0, 0, 2, 3}, {0, 4, 1, 1},
                             {0, 0.1, 5, 0.2}, {0, 3, 20, 0}};
  double worst = std::numeric_limits<double>::infinity();
  for (const auto& p : pairs) {
    t.guarded([&] {
      const GeodesicPath path = geodesic_path(HestonPoint(p[0], p[1]),
                                              HestonPoint(p[2], p[3]), 2);
      const double e1 = std::abs(polyline_length(path, 65) - path.length_closed_form);
      const double e2 = std::abs(polyline_length(path, 129) - path.length_closed_form);
      const double order = std::log2(e1 / e2);
      worst = std::min(worst, order);
      t.check(order, order >= 1.9);
    });
  }
  t.note("min observed order (64 -> 128 segments): " + fmt(worst));
  return t.done();
}

std::vector<SuiteResult> run_all(long n_random, std::uint64_t seed) {
  std::vector<SuiteResult> out;
  out.push_back(worked_examples());
  out.push_back(lambda_gradient(50));
  out.push_back(polyline_order());
  if (n_random <= 0) return out;
  out.push_back(cross_route(n_random, seed));
  out.push_back(two_sided_bound(n_random, seed + 1));
  out.push_back(symmetry_scaling(n_random, seed + 2));
  out.push_back(monotonicity(std::min(n_random, 500L), seed + 3));
  out.push_back(delta_far_implies_c_far(n_random, seed + 4));
  out.push_back(lambda_star_oracle_close(n_random, seed + 5));
  out.push_back(lambda_star_oracle_far(n_random, seed + 6));
  out.push_back(half_d2_inside_M(n_random, seed + 7));
  out.push_back(half_d2_far(n_random, seed + 8));
  out.push_back(geodesic_quadrature(n_random, seed + 9));
  return out;
}

}  // namespace hdist::validation
