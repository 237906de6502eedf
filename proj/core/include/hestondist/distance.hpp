#pragma once

#include "hestondist/core.hpp"
#include "hestondist/rootfind.hpp"

namespace hdist {

enum class Method { C, Delta };

/// Heston distance between arbitrary points. Canonicalizes the pair and
/// dispatches to the requested route; coincident points give 0 (Vertical).
DistanceSolution heston_distance(const HestonPoint& p0, const HestonPoint& p1,
                                 Method method = Method::Delta,
                                 const SolverConfig& config = {});

/// Distance of the correlated model: (1/c) d_H of the reduced pair.
DistanceSolution correlated_distance(const HestonPoint& p0, const HestonPoint& p1,
                                     const CorrelatedHestonParams& params,
                                     Method method = Method::Delta,
                                     const SolverConfig& config = {});

}  // namespace hdist
