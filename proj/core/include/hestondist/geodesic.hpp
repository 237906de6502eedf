#pragma once

#include <optional>
#include <vector>

#include "hestondist/core.hpp"
#include "hestondist/rootfind.hpp"

namespace hdist {

/// Sampled length-minimizing curve between two Heston points.
///
/// Non-vertical paths are arcs of the cycloid
///   x(phi) = (2 phi - sin 2 phi) / (2 C^2) - b,  v(phi) = sin^2(phi) / C^2
/// for phi in [param_begin, param_end]; vertical paths use w = sqrt(v) as the
/// parameter. Samples are uniform in the parameter.
struct GeodesicPath {
  std::vector<HestonPoint> samples;
  double C_star = 0.0;
  double shift_b = 0.0;
  std::optional<HestonPoint> apex;
  double length_closed_form = 0.0;
  double length_quadrature = 0.0;

  Regime regime = Regime::Vertical;
  bool vertical = true;
  double param_begin = 0.0;
  double param_end = 0.0;
  /// Distance from the last sample to the requested end point (the first
  /// endpoint is matched by construction through b).
  double endpoint_residual = 0.0;
  /// Canonical frame the parametrization lives in.
  CanonicalPair frame;
};

/// Geodesic between the two points of a canonical pair, in canonical
/// coordinates. n_samples must be at least 2.
GeodesicPath geodesic_path(const CanonicalPair& pair, int n_samples,
                           const SolverConfig& config = {});

/// Same curve mapped back to the original frame of (p0, p1).
GeodesicPath geodesic_path(const HestonPoint& p0, const HestonPoint& p1,
                           int n_samples, const SolverConfig& config = {});

/// Gauss-Legendre integral of sqrt(1 + (dx/dv)^2) / sqrt(v) dv along each
/// monotone branch, after the substitution v = sin^2(phi)/C^2.
double arc_length_quadrature(const GeodesicPath& path);

/// Metric length of a polyline through the cycloid at n_samples points
/// uniform in the parameter, with 1/sqrt(v) taken at the parameter midpoint
/// of each segment.
double polyline_length(const GeodesicPath& path, int n_samples);

}  // namespace hdist
