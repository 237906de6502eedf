#pragma once

#include "hestondist/core.hpp"
#include "hestondist/rootfind.hpp"

namespace hdist {

enum class CKind { CClose, CFar, OnThreshold };

struct CClassification {
  CKind kind = CKind::CFar;
  /// F(v_min, v_max, 1/sqrt(v_max)); zero when v_min == v_max.
  double threshold = 0.0;
};

/// Relative band around the threshold treated as the apex configuration.
inline constexpr double kOnThresholdBand = 1e-12;

/// Fbar(v, C) = asin(C sqrt v)/C^2 - sqrt(v) sqrt(1 - C^2 v)/C, odd in C.
/// Requires C^2 v <= 1 (up to 1e-12); C = 0 returns the limit 0.
double fbar(double v, double C);
/// d Fbar / dC; +inf at C^2 v = 1.
double fbar_dC(double v, double C);

/// F(v0, v1, C) = Fbar(v1, C) - Fbar(v0, C), with F(v0, v1, 0) = 0.
double F(double v0, double v1, double C);
double F_dC(double v0, double v1, double C);

/// sum over i of sqrt(v_i) sqrt(1 - C^2 v_i)/C + acos(C sqrt v_i)/C^2,
/// for 0 < C <= min(v0^-1/2, v1^-1/2). Decreasing in C, infinite at 0+.
double Ftilde(double v0, double v1, double C);
double Ftilde_dC(double v0, double v1, double C);

/// Close/far threshold F(v_min, v_max, 1/sqrt(v_max)) in closed form:
/// sqrt(v_min (v_max - v_min)) + v_max acos(sqrt(v_min / v_max)).
double c_threshold(double v0, double v1);

CClassification classify_C(const CanonicalPair& pair);

/// Root of F(v0, v1, C) = dx on (0, v1^-1/2]. Requires v1 > v0 and dx at or
/// below the threshold. Throws SolverFailure if the solver does not converge.
RootResult solve_C_close(const CanonicalPair& pair,
                         const SolverConfig& config = {});

/// Root of Ftilde(v0, v1, C) = dx on (0, v_max^-1/2]. Requires dx at or
/// above the threshold.
RootResult solve_C_far(const CanonicalPair& pair,
                       const SolverConfig& config = {});

/// Distance by the C-formulas. Vertical pairs are answered directly; pairs
/// on the boundary v = 0 solve the far equation and are tagged Boundary.
DistanceSolution distance_C(const CanonicalPair& pair,
                            const SolverConfig& config = {});

}  // namespace hdist
