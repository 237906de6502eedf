#include "hestondist/geodesic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <boost/math/quadrature/gauss.hpp>

#include "hestondist/cregime.hpp"
#include "hestondist/detail/trig_series.hpp"

namespace hdist {

namespace {

using std::numbers::pi;
using Gauss = boost::math::quadrature::gauss<double, 30>;

double clamped_asin(double s) { return std::asin(std::min(1.0, s)); }

HestonPoint make_point(double x, double v) {
  HestonPoint p;
  p.x = x;
  p.v = std::max(0.0, v);
  return p;
}

HestonPoint point_at(const GeodesicPath& path, double param) {
  if (path.vertical) return make_point(0.0, param * param);
  const double C = path.C_star;
  const double s = std::sin(param);
  return make_point(detail::x_minus_sin(2.0 * param) / (2.0 * C * C) - path.shift_b,
                    s * s / (C * C));
}

}  // namespace

GeodesicPath geodesic_path(const CanonicalPair& pair, int n_samples,
                           const SolverConfig& config) {
  if (n_samples < 2) {
    throw std::invalid_argument("geodesic_path: need at least 2 samples");
  }
  GeodesicPath path;
  path.frame = pair;
  const double v0 = pair.v_min();
  const double v1 = pair.v_max();

  if (pair.vertical()) {
    path.vertical = true;
    path.regime = Regime::Vertical;
    path.param_begin = std::sqrt(v0);
    path.param_end = std::sqrt(v1);
    path.length_closed_form = vertical_distance(v0, v1);
  } else {
    const DistanceSolution sol = distance_C(pair, config);
    const double C = *sol.parameter;
    path.vertical = false;
    path.regime = sol.regime;
    path.C_star = C;
    path.shift_b = fbar(v0, C);
    path.param_begin = clamped_asin(C * std::sqrt(v0));
    const double a1 = clamped_asin(C * std::sqrt(v1));
    path.param_end = sol.regime == Regime::CClose ? a1 : pi - a1;
    if (sol.regime != Regime::CClose) {
      path.apex = make_point(0.5 * pi / (C * C) - path.shift_b, 1.0 / (C * C));
    }
    path.length_closed_form = sol.value;
  }

  path.samples.reserve(static_cast<std::size_t>(n_samples));
  const double step = (path.param_end - path.param_begin) / (n_samples - 1);
  for (int i = 0; i < n_samples; ++i) {
    const double p = i + 1 == n_samples ? path.param_end : path.param_begin + i * step;
    path.samples.push_back(point_at(path, p));
  }
  const HestonPoint& last = path.samples.back();
  path.endpoint_residual = std::hypot(last.x - pair.dx(), last.v - v1);
  path.length_quadrature = arc_length_quadrature(path);
  return path;
}

GeodesicPath geodesic_path(const HestonPoint& p0, const HestonPoint& p1,
                           int n_samples, const SolverConfig& config) {
  const CanonicalPair pair = canonicalize(p0, p1);
  GeodesicPath path = geodesic_path(pair, n_samples, config);
  const CanonicalTransform& t = pair.transform;
  auto map = [&](HestonPoint q) {
    // Exchanging the variances mirrors the curve about x = dx/2.
    if (t.swapped) q.x = pair.dx() - q.x;
    if (t.reflected) q.x = -q.x;
    q.x += t.translation;
    return q;
  };
  for (auto& q : path.samples) q = map(q);
  if (t.swapped) std::reverse(path.samples.begin(), path.samples.end());
  if (path.apex) path.apex = map(*path.apex);
  return path;
}

double arc_length_quadrature(const GeodesicPath& path) {
  if (path.vertical) {
    // v = w^2: ds = dv / sqrt(v) = 2 w dw / w.
    auto integrand = [](double w) { return 2.0 * w / std::sqrt(w * w); };
    if (path.param_begin == path.param_end) return 0.0;
    return Gauss::integrate(integrand, path.param_begin, path.param_end);
  }
  const double C = path.C_star;
  auto integrand = [C](double phi) {
    const double s = std::sin(phi);
    const double v = s * s / (C * C);
    const double dv_dphi = std::abs(std::sin(2.0 * phi)) / (C * C);
    const double slope = C * std::sqrt(v) / std::sqrt(1.0 - C * C * v);
    return std::sqrt(1.0 + slope * slope) / std::sqrt(v) * dv_dphi;
  };
  const double a = path.param_begin;
  const double b = path.param_end;
  const double apex = 0.5 * pi;
  if (b <= apex) return Gauss::integrate(integrand, a, b);
  // Ascending branch up to the apex, then the descending one.
  return Gauss::integrate(integrand, a, apex) + Gauss::integrate(integrand, apex, b);
}

double polyline_length(const GeodesicPath& path, int n_samples) {
  if (n_samples < 2) {
    throw std::invalid_argument("polyline_length: need at least 2 samples");
  }
  const double a = path.param_begin;
  const double h = (path.param_end - a) / (n_samples - 1);
  double total = 0.0;
  HestonPoint prev = point_at(path, a);
  for (int i = 1; i < n_samples; ++i) {
    const HestonPoint next = point_at(path, a + i * h);
    const double v_mid = point_at(path, a + (i - 0.5) * h).v;
    total += std::hypot(next.x - prev.x, next.v - prev.v) / std::sqrt(v_mid);
    prev = next;
  }
  return total;
}

}  // namespace hdist
