#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "hestondist/deltaregime.hpp"
#include "hestondist/distance.hpp"
#include "hestondist/errors.hpp"

namespace hdist {
namespace {

using std::numbers::pi;

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

TEST(FDelta, ReferenceValues) {
  EXPECT_LT(rel(f_delta(1e-5, 1.0, 4.0), 0.000023333333333427777778), 1e-14);
  EXPECT_LT(rel(f_delta(2.0, 1.0, 4.0), 5.5522930916972729384), 1e-14);
  EXPECT_LT(rel(f_delta(5.0, 0.5, 2.0), 35.322210980730069572), 1e-13);
  EXPECT_LT(rel(f_delta(pi, 1.0, 1.0), pi + 2.0), 1e-15);
  EXPECT_EQ(f_delta(0.0, 1.0, 4.0), 0.0);
}

TEST(FDelta, OddAndSeriesContinuous) {
  const DeltaWeights w = DeltaWeights::heston(0.3, 2.0);
  EXPECT_EQ(f_delta(-1.3, w), -f_delta(1.3, w));
  // Across the series switch.
  const double a = f_delta(0.99e-4, w);
  const double b = f_delta(1.01e-4, w);
  EXPECT_NEAR(b / a, 1.01 / 0.99, 1e-9);
}

TEST(FDelta, DerivativeMatchesReference) {
  EXPECT_LT(rel(f_delta_prime(2.0, DeltaWeights::heston(1.0, 4.0)), 3.8117038158742277555),
            1e-13);
}

TEST(FDelta, FarFormMatchesDirect) {
  const DeltaWeights w = DeltaWeights::heston(0.5, 2.0);
  for (double u : {0.1, 0.7, 2.0, 3.0}) {
    EXPECT_LT(rel(f_delta_far(u, w), f_delta(2.0 * pi - u, w)), 1e-12) << u;
  }
}

TEST(FDelta, OutsideDomainThrows) {
  EXPECT_THROW(f_delta(2.0 * pi, 1.0, 1.0), DomainError);
}

TEST(Threshold, Values) {
  EXPECT_LT(rel(delta_threshold(1.0, 4.0), 11.853981633974483096), 1e-15);
  EXPECT_EQ(classify_delta(canonicalize({0, 1}, {5, 1})).kind, DeltaKind::DeltaClose);
  EXPECT_EQ(classify_delta(canonicalize({0, 1}, {6, 1})).kind, DeltaKind::DeltaFar);
}

TEST(SolveDelta, Roots) {
  EXPECT_LT(rel(solve_delta(canonicalize({0, 1}, {1, 4})).root, 0.42543356506890567319),
            1e-13);
  EXPECT_LT(rel(solve_delta(canonicalize({0, 1}, {10, 1})).root, 4.0038882590774441318),
            1e-13);
}

TEST(SolveDelta, FarComplementKept) {
  const DeltaWeights w = DeltaWeights::heston(0.01, 0.02);
  const DeltaRoot r = solve_delta_equation(w, 30.0);
  EXPECT_TRUE(r.far);
  EXPECT_LT(rel(r.complement, 0.15629111437562748993), 1e-11);
  EXPECT_LT(rel(delta_formula(r, w), 18.933550085083389465), 1e-12);
}

TEST(SolveDelta, NegativeTargetGivesNegativeRoot) {
  const DeltaWeights w = DeltaWeights::heston(1.0, 4.0);
  const DeltaRoot r = solve_delta_equation(w, -1.0);
  EXPECT_LT(rel(r.delta, -0.42543356506890567319), 1e-13);
}

TEST(DistanceDelta, Values) {
  const DistanceSolution s = distance_delta(canonicalize({0, 1}, {10, 1}));
  EXPECT_EQ(s.regime, Regime::DeltaFar);
  EXPECT_LT(rel(s.value, 7.4216985445763865882), 1e-13);
  ASSERT_TRUE(s.diagnostics.secondary_regime);
  EXPECT_EQ(*s.diagnostics.secondary_regime, Regime::CFar);

  const DistanceSolution m = distance_delta(canonicalize({0, 1}, {5, 1}));
  EXPECT_EQ(m.regime, Regime::DeltaClose);
  EXPECT_EQ(*m.diagnostics.secondary_regime, Regime::CFar);
  EXPECT_LT(rel(m.value, 4.3422615231803522951), 1e-13);
}

TEST(DistanceDelta, SmallDeltaAndNearbyPoints) {
  const DistanceSolution s = distance_delta(canonicalize({0, 3}, {0.001, 3.5}));
  EXPECT_LT(rel(s.value, 0.27755632647277363962), 1e-12);
  EXPECT_LT(rel(*s.parameter, 0.00030799650122052549321), 1e-10);
}

TEST(DistanceDelta, GeneralPair) {
  EXPECT_LT(rel(heston_distance({-2, 0.5}, {0.7, 2}).value, 2.7779179165881233773), 1e-13);
  // Default solver tolerances stop the C solve at a residual near 1e-11.
  EXPECT_LT(rel(heston_distance({-2, 0.5}, {0.7, 2}, Method::C).value,
                2.7779179165881233773),
            1e-10);
}

TEST(Boundary, Formula) {
  EXPECT_LT(rel(boundary_distance(4.0), 2.0 * std::sqrt(4.0 * pi)), 1e-15);
  const DistanceSolution s = distance_delta(canonicalize({1, 0}, {5, 0}));
  EXPECT_EQ(s.regime, Regime::Boundary);
  EXPECT_LT(rel(s.value, 4.0 * std::sqrt(pi)), 1e-15);
}

TEST(CofDelta, ConnectionValues) {
  EXPECT_LT(rel(C_of_delta(1.5 * pi, 1.0, 1.0), 0.38268343236508977173), 1e-14);
  const DeltaWeights w = DeltaWeights::heston(1.0, 1.0);
  EXPECT_LT(rel(C_of_delta_complement(0.5 * pi, w), 0.38268343236508977173), 1e-14);
  // C* of the far pair (0,1),(10,1).
  EXPECT_LT(rel(C_of_delta(4.0038882590774441318, 1.0, 1.0), 0.53948408642970243764),
            1e-12);
}

TEST(GrushinWeights, MixedSignMonotone) {
  const DeltaWeights w = DeltaWeights::grushin(1.0, -0.3);
  EXPECT_LT(w.cross, 0.0);
  const DeltaRoot r = solve_delta_equation(w, 0.8);
  EXPECT_NEAR(f_delta(r.delta, w), 0.8, 1e-12);
}

}  // namespace
}  // namespace hdist
