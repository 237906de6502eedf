#include "hestondist/grushin.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "hestondist/deltaregime.hpp"
#include "hestondist/detail/trig_series.hpp"
#include "hestondist/errors.hpp"

namespace hdist {

namespace {

using std::numbers::pi;

constexpr double kRelationTol = 1e-9;

// tan(delta/2) / delta
double half_tan_ratio(double delta) {
  return 0.5 * detail::tan_over_x(0.5 * delta);
}

}  // namespace

double lambda(double delta, double gamma, double x0, double y0) {
  if (!(std::abs(delta) < pi)) return std::numeric_limits<double>::infinity();
  const double tr = half_tan_ratio(delta);
  return x0 * delta + y0 * y0 * delta * delta * tr + 0.25 * gamma * gamma * tr +
         y0 * gamma / std::cos(0.5 * delta);
}

std::pair<double, double> grad_lambda(double delta, double gamma, double x0,
                                      double y0) {
  if (!(std::abs(delta) < pi)) {
    throw DomainError("grad_lambda: |delta| must be below pi");
  }
  const double h = 0.5 * delta;
  const double ch = std::cos(h);
  const double c2 = ch * ch;
  const double gamma_term =
      delta == 0.0 ? 0.0 : detail::x_minus_sin(delta) / (delta * delta);
  const double d_delta = x0 + y0 * y0 * (delta + std::sin(delta)) / (2.0 * c2) +
                         gamma * gamma * gamma_term / (8.0 * c2) +
                         y0 * gamma * std::sin(h) / (2.0 * c2);
  const double d_gamma = 0.5 * gamma * half_tan_ratio(delta) + y0 / ch;
  return {d_delta, d_gamma};
}

double lambda_t(double t, double delta, double gamma, double x0, double y0) {
  if (!(t > 0.0)) throw DomainError("lambda_t: t must be positive");
  if (!(std::abs(delta) < pi)) {
    throw DomainError("lambda_t: |delta| must be below pi");
  }
  return lambda(delta, gamma, x0, y0) - 0.5 * t * std::log(std::cos(0.5 * delta));
}

double exponential_moment(double t, double delta, double gamma, double x0,
                          double y0) {
  return std::exp(lambda_t(t, delta, gamma, x0, y0) / t);
}

double grushin_threshold(double y0, double y1) {
  return 0.5 * (pi * (y0 * y0 + y1 * y1) + 4.0 * y0 * y1);
}

bool in_region_M(double x0, double y0, double x1, double y1) {
  return std::abs(x1 - x0) < grushin_threshold(y0, y1);
}

LCGFDomainPoint critical_point(double x0, double y0, double x1, double y1,
                               const SolverConfig& config) {
  const double dx = x1 - x0;
  if (!(std::abs(dx) < grushin_threshold(y0, y1))) {
    throw NoInteriorCritical("critical_point: |x1 - x0| is not below the "
                             "threshold, no critical point with |delta| < pi");
  }
  const DeltaWeights w = DeltaWeights::grushin(y0, y1);
  const double delta = solve_delta_equation(w, dx, config).delta;
  const double h = 0.5 * delta;
  const double sq = std::sin(0.5 * h);
  // 2 delta (y1 cos h - y0) / sin h, finite at delta = 0.
  const double gamma =
      4.0 * detail::x_over_sin(h) * ((y1 - y0) - 2.0 * y1 * sq * sq);
  return {delta, gamma};
}

RateFunctionResult lambda_star(double x0, double y0, double x1, double y1,
                               const SolverConfig& config) {
  RateFunctionResult out;
  const double dx = x1 - x0;
  const double adx = std::abs(dx);
  const double threshold = grushin_threshold(y0, y1);
  const DeltaWeights w = DeltaWeights::grushin(y0, y1);
  out.R1 = pi * (adx - 2.0 * y0 * y1);

  if (adx <= threshold) {
    out.kind = RateKind::InteriorCritical;
    const double delta = adx > 0.0 ? solve_delta_equation(w, dx, config).delta : 0.0;
    const double h = 0.5 * delta;
    const double sq = std::sin(0.5 * h);
    const double q = 2.0 * detail::x_over_sin(h);  // delta / sin(delta/2)
    // delta^2 / (2 sin^2 h) (y0^2 + y1^2 - 2 y0 y1 cos h), with the bracket
    // written as (y1 - y0)^2 + 4 y0 y1 sin^2(h/2).
    const double r2 = 0.5 * q * q * (w.diff_sq + 4.0 * w.cross * sq * sq);
    out.delta_star = delta;
    out.gamma_star = 2.0 * q * ((y1 - y0) - 2.0 * y1 * sq * sq);
    out.R2 = r2;
    out.value = r2;
  } else {
    out.kind = RateKind::BoundaryContribution;
    out.value = out.R1;
    if (w.sum == 0.0) {
      // Both endpoints on y = 0: d_G = 2 sqrt(pi |dx|).
      out.R2 = 2.0 * pi * adx;
    } else if (w.cross >= 0.0) {
      const DeltaRoot root = solve_delta_equation(w, dx, config);
      const double d = delta_formula(root, w);
      out.R2 = 0.5 * d * d;
    }
  }
  if (out.R2 && *out.R2 < out.R1 - kRelationTol * std::max(1.0, std::abs(out.R1))) {
    throw std::logic_error("lambda_star: critical value below boundary value");
  }
  return out;
}

DistanceSolution grushin_distance(const GrushinPoint& p0, const GrushinPoint& p1,
                                  Method method, const SolverConfig& config) {
  if (p0.y * p1.y >= 0.0) {
    // y -> -y is an isometry, and d_G((x, y), .) = d_H((x, y^2), .).
    return heston_distance(HestonPoint(p0.x, p0.y * p0.y),
                           HestonPoint(p1.x, p1.y * p1.y), method, config);
  }
  if (std::abs(p1.x - p0.x) > grushin_threshold(p0.y, p1.y)) {
    throw UnsupportedMixedSignFar(
        "grushin_distance: endpoints on opposite sides of y = 0 beyond the "
        "close branch");
  }
  const RateFunctionResult rs = lambda_star(p0.x, p0.y, p1.x, p1.y, config);
  DistanceSolution out;
  out.value = std::sqrt(2.0 * rs.value);
  out.regime = p1.x == p0.x ? Regime::Vertical : Regime::DeltaClose;
  out.parameter = rs.delta_star;
  out.diagnostics.converged = true;
  return out;
}

HalfD2Comparison half_d2_vs_lambda_star(double x0, double y0, double x1, double y1) {
  HalfD2Comparison out;
  // The C route keeps d_G independent of the delta-equation behind Lambda*
  // whenever the endpoints are on the same side of y = 0.
  const double d = grushin_distance({x0, y0}, {x1, y1}, Method::C).value;
  out.half_d2 = 0.5 * d * d;
  out.lambda_star = lambda_star(x0, y0, x1, y1).value;
  const double scale = std::max(out.half_d2, out.lambda_star);
  const double gap = out.half_d2 - out.lambda_star;
  if (std::abs(gap) <= kRelationTol * scale) {
    out.relation = HalfD2Relation::Equal;
  } else if (gap > 0.0) {
    out.relation = HalfD2Relation::StrictlyGreater;
  } else {
    throw std::logic_error("half_d2_vs_lambda_star: d^2/2 below Lambda*");
  }
  return out;
}

}  // namespace hdist
