#include "hestondist/core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hestondist/errors.hpp"

namespace hdist {

namespace {

constexpr double kVarianceNoise = 1e-12;

}  // namespace

HestonPoint::HestonPoint(double x_, double v_) : x(x_), v(v_) {
  if (!std::isfinite(x) || !std::isfinite(v)) {
    throw DomainError("HestonPoint: coordinates must be finite");
  }
  if (v < 0.0) {
    if (v <= -kVarianceNoise) {
      throw DomainError("HestonPoint: negative variance " + std::to_string(v));
    }
    v = 0.0;
  }
}

GrushinPoint::GrushinPoint(double x_, double y_) : x(x_), y(y_) {
  if (!std::isfinite(x) || !std::isfinite(y)) {
    throw DomainError("GrushinPoint: coordinates must be finite");
  }
}

CorrelatedHestonParams::CorrelatedHestonParams(double rho_, double c_)
    : rho(rho_), c(c_) {
  if (!(rho > -1.0 && rho < 1.0)) {
    throw DomainError("correlation must lie in (-1, 1)");
  }
  if (!(c > 0.0) || !std::isfinite(c)) {
    throw DomainError("vol-of-vol must be positive");
  }
}

CanonicalPair canonicalize(const HestonPoint& p0, const HestonPoint& p1) {
  CanonicalPair out;
  const double dx = p1.x - p0.x;
  out.transform.translation = p0.x;
  out.transform.reflected = dx < 0.0;
  out.transform.swapped = p0.v > p1.v;
  out.p0.x = 0.0;
  out.p0.v = std::min(p0.v, p1.v);
  out.p1.x = std::abs(dx);
  out.p1.v = std::max(p0.v, p1.v);
  return out;
}

std::pair<HestonPoint, HestonPoint> restore(const CanonicalPair& pair) {
  const auto& t = pair.transform;
  HestonPoint a;
  HestonPoint b;
  a.x = t.translation;
  b.x = t.translation + (t.reflected ? -pair.dx() : pair.dx());
  a.v = t.swapped ? pair.v_max() : pair.v_min();
  b.v = t.swapped ? pair.v_min() : pair.v_max();
  return {a, b};
}

HestonPoint scale(const HestonPoint& p, double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw DomainError("scale factor must be positive");
  }
  return HestonPoint(alpha * p.x, alpha * p.v);
}

CorrelatedReduction reduce_correlated(const HestonPoint& p0,
                                      const HestonPoint& p1,
                                      const CorrelatedHestonParams& params) {
  const double root = std::sqrt(1.0 - params.rho * params.rho);
  auto map = [&](const HestonPoint& p) {
    return HestonPoint((params.c * p.x - params.rho * p.v) / root, p.v);
  };
  return {map(p0), map(p1), 1.0 / params.c};
}

double bound_D(const HestonPoint& p0, const HestonPoint& p1) {
  const double r = std::hypot(p1.x - p0.x, p1.v - p0.v);
  if (r == 0.0) return 0.0;
  return r / (std::sqrt(p0.v) + std::sqrt(p1.v) + std::sqrt(r));
}

double vertical_distance(double v0, double v1) {
  if (v0 < 0.0 || v1 < 0.0) {
    throw DomainError("vertical_distance: variances must be non-negative");
  }
  const double s = std::sqrt(v0) + std::sqrt(v1);
  if (s == 0.0) return 0.0;
  // 2|sqrt(v1) - sqrt(v0)| without cancellation for v0 ~ v1.
  return 2.0 * std::abs(v1 - v0) / s;
}

std::string_view to_string(Regime r) {
  switch (r) {
    case Regime::CClose: return "C-close";
    case Regime::CFar: return "C-far";
    case Regime::DeltaClose: return "delta-close";
    case Regime::DeltaFar: return "delta-far";
    case Regime::Vertical: return "vertical";
    case Regime::Boundary: return "boundary";
  }
  return "unknown";
}

}  // namespace hdist
