#pragma once

#include <optional>
#include <utility>

#include "hestondist/core.hpp"
#include "hestondist/distance.hpp"

namespace hdist {

struct LCGFDomainPoint {
  double delta = 0.0;
  double gamma = 0.0;
};

enum class RateKind { InteriorCritical, BoundaryContribution };

struct RateFunctionResult {
  double value = 0.0;
  RateKind kind = RateKind::InteriorCritical;
  std::optional<double> delta_star;
  std::optional<double> gamma_star;
  double R1 = 0.0;
  /// Critical-point value. In the far branch it is still reported for pairs
  /// with y0 y1 >= 0 through the extended root pi < |delta| < 2 pi.
  std::optional<double> R2;
};

enum class HalfD2Relation { Equal, StrictlyGreater };

struct HalfD2Comparison {
  double half_d2 = 0.0;
  double lambda_star = 0.0;
  HalfD2Relation relation = HalfD2Relation::Equal;
};

/// Limiting cumulant generating function
/// x0 delta + y0^2 delta tan(delta/2) + gamma^2 tan(delta/2) / (4 delta)
///   + y0 gamma / cos(delta/2),
/// +inf for |delta| >= pi.
double lambda(double delta, double gamma, double x0, double y0);

/// (dLambda/ddelta, dLambda/dgamma) for |delta| < pi.
std::pair<double, double> grad_lambda(double delta, double gamma, double x0,
                                      double y0);

/// Lambda - (t/2) log cos(delta/2); throws DomainError outside |delta| < pi.
double lambda_t(double t, double delta, double gamma, double x0, double y0);

/// Closed-form E exp((delta G_t + gamma H_t) / t) = exp(lambda_t / t).
double exponential_moment(double t, double delta, double gamma, double x0,
                          double y0);

/// (1/2)[pi (y0^2 + y1^2) + 4 y0 y1]; the close branch needs |dx| at or below it.
double grushin_threshold(double y0, double y1);

/// Solution of grad Lambda(delta, gamma) = (x1, y1) with |delta| < pi.
/// Throws NoInteriorCritical unless |x1 - x0| < grushin_threshold(y0, y1).
LCGFDomainPoint critical_point(double x0, double y0, double x1, double y1,
                               const SolverConfig& config = {});

/// Legendre-Fenchel transform of Lambda at (x1, y1).
RateFunctionResult lambda_star(double x0, double y0, double x1, double y1,
                               const SolverConfig& config = {});

/// Strict membership |x1 - x0| < grushin_threshold(y0, y1).
bool in_region_M(double x0, double y0, double x1, double y1);

/// Grushin distance. Same-sign pairs go through d_H with v = y^2; pairs with
/// y0 y1 < 0 are answered as sqrt(2 Lambda*) in the close branch and throw
/// UnsupportedMixedSignFar otherwise.
DistanceSolution grushin_distance(const GrushinPoint& p0, const GrushinPoint& p1,
                                  Method method = Method::Delta,
                                  const SolverConfig& config = {});

/// Compares d_G^2 / 2 with Lambda*. Equal within 1e-9 relative, otherwise
/// StrictlyGreater; a value of d_G^2 / 2 below Lambda* throws logic_error.
HalfD2Comparison half_d2_vs_lambda_star(double x0, double y0, double x1, double y1);

}  // namespace hdist
