#include "hestondist/rootfind.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "hestondist/errors.hpp"

namespace hdist {

namespace {

constexpr double kTiny = 1e-300;

bool same_strict_sign(double a, double b) {
  return (a > 0.0 && b > 0.0) || (a < 0.0 && b < 0.0);
}

bool at_ulp_width(double lo, double hi) {
  return std::nextafter(lo, hi) >= hi ||
         std::nextafter(std::nextafter(lo, hi), hi) >= hi;
}

}  // namespace

void SolverConfig::validate() const {
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0) || !(residual_tol > 0.0)) {
    throw std::invalid_argument("SolverConfig: tolerances must be positive");
  }
  if (max_iter < 1) {
    throw std::invalid_argument("SolverConfig: max_iter must be at least 1");
  }
}

RootResult solve_monotone(const ScalarFn& g, const ScalarFn& g_prime,
                          Bracket bracket, double target,
                          const SolverConfig& config) {
  config.validate();
  double lo = std::min(bracket.lo, bracket.hi);
  double hi = std::max(bracket.lo, bracket.hi);
  double flo = g(lo) - target;
  double fhi = g(hi) - target;

  RootResult out;
  if (flo == 0.0 || fhi == 0.0) {
    out.root = flo == 0.0 ? lo : hi;
    out.converged = true;
    out.final_bracket = {lo, hi};
    return out;
  }
  if (!std::isfinite(flo) || !std::isfinite(fhi) || same_strict_sign(flo, fhi)) {
    throw NoSignChange("solve_monotone: no sign change on [" +
                       std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }

  const double res_scale =
      config.residual_tol * std::max(std::abs(target), kTiny);
  const bool increasing = fhi > 0.0;

  // Weighted endpoint values for the Illinois modification.
  double wlo = flo;
  double whi = fhi;
  int last_side = 0;

  double x = lo - wlo * (hi - lo) / (whi - wlo);
  if (!(x > lo && x < hi)) x = 0.5 * (lo + hi);
  double fx = g(x) - target;

  double step_last = std::numeric_limits<double>::infinity();
  double step_prev = hi - lo;
  double step_prev2 = step_prev;
  double width_prev = hi - lo;
  double width_prev2 = width_prev;

  for (int iter = 1; iter <= config.max_iter; ++iter) {
    out.iterations = iter;

    // Shrink the bracket with the latest evaluation.
    if (fx == 0.0) {
      lo = hi = x;
    } else if ((fx < 0.0) == increasing) {
      lo = x;
      flo = wlo = fx;
      if (last_side == -1) whi *= 0.5;
      last_side = -1;
    } else {
      hi = x;
      fhi = whi = fx;
      if (last_side == 1) wlo *= 0.5;
      last_side = 1;
    }

    const double width = hi - lo;
    const double tol = config.abs_tol + config.rel_tol * std::abs(x);
    const bool residual_ok = std::abs(fx) <= res_scale;
    if (fx == 0.0 || (residual_ok && (width <= tol || step_last <= tol))) {
      out.converged = true;
      break;
    }
    if (at_ulp_width(lo, hi)) {
      // Nothing left to refine; keep the better endpoint.
      if (std::abs(flo) < std::abs(fx)) { x = lo; fx = flo; }
      if (std::abs(fhi) < std::abs(fx)) { x = hi; fx = fhi; }
      out.converged = true;
      break;
    }

    double next = std::numeric_limits<double>::quiet_NaN();
    if (g_prime) {
      // Newton, accepted only if it stays inside and the step sizes keep
      // halving (otherwise the iteration is not in its quadratic basin).
      const double d = g_prime(x);
      if (std::isfinite(d) && d != 0.0) {
        next = x - fx / d;
        if (std::abs(next - x) > 0.5 * step_prev2) next = lo - 1.0;
      }
    } else if (width <= 0.5 * width_prev2) {
      next = lo - wlo * (hi - lo) / (whi - wlo);
    }
    width_prev2 = width_prev;
    width_prev = width;
    if (!(next > lo && next < hi)) next = lo + 0.5 * (hi - lo);

    const double step = std::abs(next - x);
    step_prev2 = step_prev;
    step_prev = step;
    step_last = step;
    x = next;
    fx = g(x) - target;
    if (!std::isfinite(fx)) {
      throw SolverFailure("solve_monotone: non-finite function value at " +
                          std::to_string(x));
    }
  }

  out.root = x;
  out.residual = fx;
  out.final_bracket = {lo, hi};
  return out;
}

Bracket bracket_from_open_endpoint(const ScalarFn& g, double open_end,
                                   double interior_point, double target,
                                   int max_halvings) {
  const double f_int = g(interior_point) - target;
  if (f_int == 0.0) return {interior_point, interior_point};

  double prev = interior_point;
  double dist = interior_point - open_end;
  for (int k = 0; k < max_halvings; ++k) {
    dist *= 0.5;
    const double p = open_end + dist;
    if (p == open_end || p == prev) break;
    const double fp = g(p) - target;
    if (std::isfinite(fp) && !same_strict_sign(fp, f_int)) {
      return {std::min(prev, p), std::max(prev, p)};
    }
    prev = p;
  }
  throw MaxIterations("bracket_from_open_endpoint: no sign change found "
                      "approaching the open endpoint");
}

}  // namespace hdist
