#include "hestondist/deltaregime.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "hestondist/cregime.hpp"
#include "hestondist/detail/trig_series.hpp"
#include "hestondist/errors.hpp"

namespace hdist {

namespace {

using std::numbers::pi;

constexpr double kSeriesSwitch = 1e-4;

void check_delta(double delta) {
  if (!(std::abs(delta) < 2.0 * pi)) {
    throw DomainError("f_delta: |delta| must be below 2 pi, got " +
                      std::to_string(delta));
  }
}

// B(delta) without cancellation near delta = 0.
double b_close(double delta, const DeltaWeights& w) {
  return w.sum * detail::x_minus_sin(delta) +
         4.0 * w.cross * detail::sin_minus_x_cos(0.5 * delta);
}

// -f'(delta) expressed in u = 2 pi - delta, i.e. df/du.
double f_delta_far_du(double u, const DeltaWeights& w) {
  const double su = std::sin(0.5 * u);
  const double cu = std::cos(0.5 * u);
  const double b = w.sum * ((2.0 * pi - u) + std::sin(u)) +
                   4.0 * w.cross * (su + (pi - 0.5 * u) * cu);
  const double bp = 2.0 * w.sum * su * su + w.cross * (2.0 * pi - u) * su;
  return -(bp / (2.0 * su * su) + b * cu / (2.0 * su * su * su));
}

// Grushin pairs with y0 y1 < 0 fall outside the monotonicity proof; check it
// on a grid before trusting the solver.
void check_monotone_close(const DeltaWeights& w) {
  constexpr int kGrid = 64;
  double prev = 0.0;
  for (int i = 1; i <= kGrid; ++i) {
    const double d = pi * i / kGrid;
    const double f = f_delta(d, w);
    if (!(f > prev)) {
      throw SolverFailure("delta-equation is not increasing on (0, pi] for "
                          "these weights");
    }
    prev = f;
  }
}

}  // namespace

DeltaWeights DeltaWeights::heston(double v0, double v1) {
  if (v0 < 0.0 || v1 < 0.0) throw DomainError("DeltaWeights: negative variance");
  const double r0 = std::sqrt(v0);
  const double r1 = std::sqrt(v1);
  return {v0 + v1, r0 * r1, (r1 - r0) * (r1 - r0)};
}

DeltaWeights DeltaWeights::grushin(double y0, double y1) {
  return {y0 * y0 + y1 * y1, y0 * y1, (y1 - y0) * (y1 - y0)};
}

double f_delta(double delta, const DeltaWeights& w) {
  check_delta(delta);
  const double ad = std::abs(delta);
  if (ad < kSeriesSwitch) {
    const double d2 = delta * delta;
    return delta * ((w.sum + w.cross) / 3.0 +
                    d2 * (w.sum / 90.0 + 7.0 * w.cross / 360.0 +
                          d2 * (w.sum / 2520.0 + 31.0 * w.cross / 40320.0)));
  }
  if (ad > pi) {
    const double f = f_delta_far(2.0 * pi - ad, w);
    return delta < 0.0 ? -f : f;
  }
  const double sh = std::sin(0.5 * delta);
  return b_close(delta, w) / (2.0 * sh * sh);
}

double f_delta(double delta, double v0, double v1) {
  return f_delta(delta, DeltaWeights::heston(v0, v1));
}

double f_delta_prime(double delta, const DeltaWeights& w) {
  check_delta(delta);
  const double ad = std::abs(delta);
  if (ad < kSeriesSwitch) {
    const double d2 = delta * delta;
    return (w.sum + w.cross) / 3.0 +
           3.0 * d2 * (w.sum / 90.0 + 7.0 * w.cross / 360.0);
  }
  if (ad > pi) return -f_delta_far_du(2.0 * pi - ad, w);
  const double h = 0.5 * delta;
  const double sh = std::sin(h);
  const double ch = std::cos(h);
  const double bp = 2.0 * w.sum * sh * sh + w.cross * delta * sh;
  return bp / (2.0 * sh * sh) - b_close(delta, w) * ch / (2.0 * sh * sh * sh);
}

double f_delta_far(double u, const DeltaWeights& w) {
  if (!(u > 0.0 && u <= pi)) {
    throw DomainError("f_delta_far: complement must lie in (0, pi]");
  }
  const double su = std::sin(0.5 * u);
  const double cu = std::cos(0.5 * u);
  const double b = w.sum * ((2.0 * pi - u) + std::sin(u)) +
                   4.0 * w.cross * (su + (pi - 0.5 * u) * cu);
  return b / (2.0 * su * su);
}

double delta_threshold(double v0, double v1) {
  if (v0 < 0.0 || v1 < 0.0) throw DomainError("delta_threshold: negative variance");
  return 0.5 * pi * (v0 + v1) + 2.0 * std::sqrt(v0 * v1);
}

DeltaClassification classify_delta(const CanonicalPair& pair) {
  DeltaClassification out;
  out.threshold = delta_threshold(pair.v_min(), pair.v_max());
  out.kind = std::abs(pair.dx()) <= out.threshold ? DeltaKind::DeltaClose
                                                  : DeltaKind::DeltaFar;
  return out;
}

DeltaRoot solve_delta_equation(const DeltaWeights& w, double dx,
                               const SolverConfig& config) {
  if (!(w.sum > 0.0)) {
    throw DomainError("solve_delta_equation: both endpoints on y = 0");
  }
  DeltaRoot out;
  const double ax = std::abs(dx);
  if (ax == 0.0) {
    out.solve.converged = true;
    return out;
  }
  const double f_pi = 0.5 * (pi * w.sum + 4.0 * w.cross);

  if (ax <= f_pi) {
    if (w.cross < 0.0) check_monotone_close(w);
    auto g = [&](double d) { return f_delta(d, w); };
    auto gp = [&](double d) { return f_delta_prime(d, w); };
    out.solve = solve_monotone(g, gp, {0.0, pi}, ax, config);
    out.delta = out.solve.root;
  } else {
    auto g = [&](double u) { return f_delta_far(u, w); };
    auto gp = [&](double u) { return f_delta_far_du(u, w); };
    // f ~ 4 pi (sum + 2 cross) / u^2 as u -> 0; start the search near there
    // so tiny variances do not exhaust the halving budget.
    double interior = pi;
    const double lead = w.sum + 2.0 * w.cross;
    if (lead > 0.0) {
      const double guess = 2.0 * std::sqrt(4.0 * pi * lead / ax);
      if (guess < pi && g(guess) < ax) interior = guess;
    }
    const Bracket b = bracket_from_open_endpoint(g, 0.0, interior, ax);
    if (b.lo == b.hi) {
      out.solve.root = b.lo;
      out.solve.converged = true;
      out.solve.final_bracket = b;
    } else {
      out.solve = solve_monotone(g, gp, b, ax, config);
    }
    out.far = true;
    out.complement = out.solve.root;
    out.delta = 2.0 * pi - out.complement;
  }
  if (!out.solve.converged) {
    throw SolverFailure("delta-equation: no convergence after " +
                        std::to_string(out.solve.iterations) + " iterations");
  }
  if (dx < 0.0) out.delta = -out.delta;
  return out;
}

RootResult solve_delta(const CanonicalPair& pair, const SolverConfig& config) {
  const DeltaRoot root = solve_delta_equation(
      DeltaWeights::heston(pair.v_min(), pair.v_max()), pair.dx(), config);
  RootResult r = root.solve;
  r.root = root.delta;
  return r;
}

double delta_formula(const DeltaRoot& root, const DeltaWeights& w) {
  if (root.far) {
    const double u = root.complement;
    const double q = std::max(0.0, w.sum + 2.0 * w.cross * std::cos(0.5 * u));
    return (2.0 * pi - u) * std::sqrt(q) / std::sin(0.5 * u);
  }
  const double ad = std::abs(root.delta);
  const double s4 = std::sin(0.25 * ad);
  const double q = std::max(0.0, w.diff_sq + 4.0 * w.cross * s4 * s4);
  return 2.0 * detail::x_over_sin(0.5 * ad) * std::sqrt(q);
}

DistanceSolution distance_delta(const CanonicalPair& pair, const SolverConfig& config) {
  DistanceSolution out;
  const double v0 = pair.v_min();
  const double v1 = pair.v_max();
  if (pair.vertical()) {
    out.value = vertical_distance(v0, v1);
    out.regime = Regime::Vertical;
    out.parameter = 0.0;
    return out;
  }
  if (v1 == 0.0) {
    // delta-hat -> 2 pi as the variances shrink to zero.
    out.value = boundary_distance(pair.dx());
    out.regime = Regime::Boundary;
    out.parameter = 2.0 * pi;
    out.diagnostics.secondary_regime = Regime::CFar;
    return out;
  }
  const DeltaWeights w = DeltaWeights::heston(v0, v1);
  const DeltaRoot root = solve_delta_equation(w, pair.dx(), config);
  out.value = delta_formula(root, w);
  out.regime = root.far ? Regime::DeltaFar : Regime::DeltaClose;
  out.parameter = root.delta;
  out.diagnostics.iterations = root.solve.iterations;
  out.diagnostics.residual = root.solve.residual;
  out.diagnostics.converged = root.solve.converged;
  out.diagnostics.secondary_regime =
      classify_C(pair).kind == CKind::CFar ? Regime::CFar : Regime::CClose;
  return out;
}

double boundary_distance(double dx) { return 2.0 * std::sqrt(pi * std::abs(dx)); }

double C_of_delta(double delta_hat, double v0, double v1) {
  const double a = std::abs(delta_hat);
  if (!(a > pi && a < 2.0 * pi)) {
    throw DomainError("C_of_delta: |delta_hat| must lie in (pi, 2 pi)");
  }
  const DeltaWeights w = DeltaWeights::heston(v0, v1);
  return C_of_delta_complement(2.0 * pi - a, w);
}

double C_of_delta_complement(double complement, const DeltaWeights& w) {
  if (!(complement > 0.0 && complement < pi)) {
    throw DomainError("C_of_delta: complement must lie in (0, pi)");
  }
  const double q = w.sum + 2.0 * w.cross * std::cos(0.5 * complement);
  return std::sin(0.5 * complement) / std::sqrt(q);
}

}  // namespace hdist
