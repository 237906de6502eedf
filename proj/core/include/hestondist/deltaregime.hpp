#pragma once

#include "hestondist/core.hpp"
#include "hestondist/rootfind.hpp"

namespace hdist {

enum class DeltaKind { DeltaClose, DeltaFar };

struct DeltaClassification {
  DeltaKind kind = DeltaKind::DeltaClose;
  /// (pi/2)(v0 + v1) + 2 sqrt(v0 v1), which equals f(pi).
  double threshold = 0.0;
};

/// Coefficients of the delta-equation. For Heston endpoints
/// sum = v0 + v1, cross = sqrt(v0 v1), diff_sq = (sqrt v1 - sqrt v0)^2;
/// the Grushin plane uses y_i in place of sqrt(v_i) with a signed cross term.
struct DeltaWeights {
  double sum = 0.0;
  double cross = 0.0;
  double diff_sq = 0.0;

  static DeltaWeights heston(double v0, double v1);
  static DeltaWeights grushin(double y0, double y1);
};

/// Root of the delta-equation. For |delta| > pi the complement
/// u = 2 pi - |delta| is kept as well, since delta itself rounds to 2 pi
/// long before u underflows.
struct DeltaRoot {
  double delta = 0.0;
  double complement = 0.0;  ///< 2 pi - |delta| when far, else 0
  bool far = false;
  RootResult solve;
};

/// f(delta) = B(delta) / (2 sin^2(delta/2)) with
/// B = sum (delta - sin delta) + 4 cross (sin(delta/2) - (delta/2) cos(delta/2)).
/// Odd; defined on (-2 pi, 2 pi).
double f_delta(double delta, const DeltaWeights& w);
double f_delta(double delta, double v0, double v1);
double f_delta_prime(double delta, const DeltaWeights& w);

/// f at delta = 2 pi - u, u in (0, pi], without forming delta.
double f_delta_far(double u, const DeltaWeights& w);

double delta_threshold(double v0, double v1);
DeltaClassification classify_delta(const CanonicalPair& pair);

/// Solves f(delta) = dx with sign(delta) = sign(dx). dx = 0 gives delta = 0.
/// Requires f not identically zero (w.sum > 0).
DeltaRoot solve_delta_equation(const DeltaWeights& w, double dx,
                               const SolverConfig& config = {});

/// delta-hat for a canonical pair (non-negative, below 2 pi).
RootResult solve_delta(const CanonicalPair& pair, const SolverConfig& config = {});

/// delta sqrt(sum - 2 cross cos(delta/2)) / sin(delta/2) at a solved root;
/// the delta -> 0 limit 2 sqrt(diff_sq) is used at delta = 0.
double delta_formula(const DeltaRoot& root, const DeltaWeights& w);

/// Distance by the delta formula. Regime is DeltaClose/DeltaFar; the C
/// classification is recorded in diagnostics.secondary_regime. Boundary
/// pairs use the limit delta-hat -> 2 pi.
DistanceSolution distance_delta(const CanonicalPair& pair,
                                const SolverConfig& config = {});

/// 2 sqrt(pi |dx|), the distance between two points of v = 0.
double boundary_distance(double dx);

/// C* = sin(u/2) / sqrt(v0 + v1 - 2 sqrt(v0 v1) cos(u/2)) at u = |delta_hat|,
/// valid for pi < |delta_hat| < 2 pi.
double C_of_delta(double delta_hat, double v0, double v1);

/// Same map written in the complement u = 2 pi - |delta_hat|.
double C_of_delta_complement(double complement, const DeltaWeights& w);

}  // namespace hdist
