#include "hestondist/distance.hpp"

#include "hestondist/cregime.hpp"
#include "hestondist/deltaregime.hpp"

namespace hdist {

DistanceSolution heston_distance(const HestonPoint& p0, const HestonPoint& p1,
                                 Method method, const SolverConfig& config) {
  const CanonicalPair pair = canonicalize(p0, p1);
  if (pair.vertical()) {
    DistanceSolution out;
    out.value = vertical_distance(pair.v_min(), pair.v_max());
    out.regime = Regime::Vertical;
    return out;
  }
  return method == Method::C ? distance_C(pair, config)
                             : distance_delta(pair, config);
}

DistanceSolution correlated_distance(const HestonPoint& p0, const HestonPoint& p1,
                                     const CorrelatedHestonParams& params,
                                     Method method, const SolverConfig& config) {
  const CorrelatedReduction red = reduce_correlated(p0, p1, params);
  DistanceSolution out = heston_distance(red.p0, red.p1, method, config);
  out.value *= red.factor;
  return out;
}

}  // namespace hdist
