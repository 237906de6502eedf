#pragma once

#include <optional>
#include <string_view>
#include <utility>

namespace hdist {

/// Point (x, v) of the closed Heston half-plane v >= 0.
///
/// Variances in (-1e-12, 0) are treated as rounding noise and clamped to 0;
/// anything more negative, or any non-finite coordinate, throws DomainError.
struct HestonPoint {
  double x = 0.0;
  double v = 0.0;

  HestonPoint() = default;
  HestonPoint(double x_, double v_);

  friend bool operator==(const HestonPoint&, const HestonPoint&) = default;
};

/// Point (x, y) of the Grushin plane; y may take either sign.
struct GrushinPoint {
  double x = 0.0;
  double y = 0.0;

  GrushinPoint() = default;
  GrushinPoint(double x_, double y_);

  friend bool operator==(const GrushinPoint&, const GrushinPoint&) = default;
};

/// Correlation and vol-of-vol of the correlated model. Drift parameters do
/// not enter the distance and are not carried.
struct CorrelatedHestonParams {
  double rho = 0.0;
  double c = 1.0;

  CorrelatedHestonParams() = default;
  CorrelatedHestonParams(double rho_, double c_);
};

/// Symmetry operations applied by canonicalize(), in order: translate by
/// -translation, reflect x -> -x, then exchange the two variances.
struct CanonicalTransform {
  double translation = 0.0;
  bool reflected = false;
  bool swapped = false;
};

/// Normal form of a point pair: p0 = (0, v_min), p1 = (|dx|, v_max).
struct CanonicalPair {
  HestonPoint p0;
  HestonPoint p1;
  CanonicalTransform transform;

  double dx() const { return p1.x; }
  double v_min() const { return p0.v; }
  double v_max() const { return p1.v; }
  bool vertical() const { return p1.x == 0.0; }
};

CanonicalPair canonicalize(const HestonPoint& p0, const HestonPoint& p1);

/// Inverse of canonicalize(): recovers the original (p0, p1).
std::pair<HestonPoint, HestonPoint> restore(const CanonicalPair& pair);

HestonPoint scale(const HestonPoint& p, double alpha);

struct CorrelatedReduction {
  HestonPoint p0;
  HestonPoint p1;
  double factor = 1.0;  ///< correlated distance = factor * d_H(p0, p1)
};

CorrelatedReduction reduce_correlated(const HestonPoint& p0,
                                      const HestonPoint& p1,
                                      const CorrelatedHestonParams& params);

/// D(p0, p1) from the two-sided estimate D <= d_H <= 12 D.
double bound_D(const HestonPoint& p0, const HestonPoint& p1);

/// Exact distance between (x, v0) and (x, v1): 2 |sqrt(v1) - sqrt(v0)|.
double vertical_distance(double v0, double v1);

enum class Regime { CClose, CFar, DeltaClose, DeltaFar, Vertical, Boundary };

std::string_view to_string(Regime r);

struct SolverDiagnostics {
  int iterations = 0;
  double residual = 0.0;
  bool converged = true;
  /// Secondary classification; the delta route records its C regime here.
  std::optional<Regime> secondary_regime;
};

struct DistanceSolution {
  double value = 0.0;
  Regime regime = Regime::Vertical;
  std::optional<double> parameter;  ///< C* or delta-hat, when one was solved
  SolverDiagnostics diagnostics;
};

}  // namespace hdist
