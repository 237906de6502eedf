#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "hestondist/cregime.hpp"
#include "hestondist/errors.hpp"

namespace hdist {
namespace {

using std::numbers::pi;

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

TEST(Fbar, SmallCSeries) {
  EXPECT_LT(rel(fbar(1.0, 1e-6), 6.666666666668666666666667737994e-7), 1e-14);
  EXPECT_EQ(fbar(1.0, 0.0), 0.0);
  EXPECT_EQ(fbar(2.0, -0.3), -fbar(2.0, 0.3));
}

TEST(Fbar, DerivativeMatchesReference) {
  EXPECT_LT(rel(fbar_dC(1.0, 0.5), 0.86002389746123026291), 1e-13);
}

TEST(F, ReferenceValues) {
  EXPECT_LT(rel(F(1.0, 4.0, 0.5), 5.920841012355268278), 1e-14);
  EXPECT_LT(rel(F_dC(1.0, 4.0, 0.3), 7.1634143855953801806), 1e-13);
}

TEST(Ftilde, ReferenceValues) {
  EXPECT_LT(rel(Ftilde(1.0, 1.0, 0.5), 11.841682024710536556), 1e-14);
  EXPECT_LT(rel(Ftilde_dC(1.0, 4.0, 0.4), -111.64217822893784633), 1e-13);
}

TEST(Ftilde, MeetsFAtApex) {
  // At C = 1/sqrt(v_max) both equations give the threshold.
  const double C = 0.5;
  EXPECT_LT(rel(Ftilde(1.0, 4.0, C), F(1.0, 4.0, C)), 1e-14);
}

TEST(Threshold, ClosedForm) {
  EXPECT_LT(rel(c_threshold(1.0, 4.0), 5.9208410123552682781), 1e-15);
  EXPECT_LT(rel(c_threshold(0.25, 1.0), 1.4802102530888170695), 1e-15);
  EXPECT_EQ(c_threshold(2.0, 2.0), 0.0);
  EXPECT_EQ(c_threshold(0.0, 0.0), 0.0);
  // v_min = 0: the quarter cycloid pi v_max / 2.
  EXPECT_LT(rel(c_threshold(0.0, 2.0), pi), 1e-15);
}

TEST(Classify, CloseFarAndThreshold) {
  EXPECT_EQ(classify_C(canonicalize({0, 1}, {1, 4})).kind, CKind::CClose);
  EXPECT_EQ(classify_C(canonicalize({0, 1}, {10, 4})).kind, CKind::CFar);
  EXPECT_EQ(classify_C(canonicalize({0, 1}, {5, 1})).kind, CKind::CFar);
  const double thr = c_threshold(1.0, 4.0);
  EXPECT_EQ(classify_C(canonicalize({0, 1}, {thr, 4})).kind, CKind::OnThreshold);
}

TEST(SolveC, CloseAndFarRoots) {
  EXPECT_LT(rel(solve_C_close(canonicalize({0, 1}, {1, 4})).root, 0.20219818774654373000),
            1e-13);
  EXPECT_LT(rel(solve_C_far(canonicalize({0, 1}, {10, 1})).root, 0.53948408642970243764),
            1e-13);
  EXPECT_LT(rel(solve_C_far(canonicalize({0, 1}, {10, 4})).root, 0.46781274348374376687),
            1e-13);
}

TEST(SolveC, ThresholdRootIsApex) {
  const double thr = c_threshold(1.0, 4.0);
  const CanonicalPair pair = canonicalize({0, 1}, {thr, 4});
  EXPECT_NEAR(solve_C_close(pair).root, 0.5, 1e-10);
  EXPECT_NEAR(solve_C_far(pair).root, 0.5, 1e-10);
}

TEST(DistanceC, Regimes) {
  const DistanceSolution close = distance_C(canonicalize({0, 1}, {1, 4}));
  EXPECT_EQ(close.regime, Regime::CClose);
  EXPECT_LT(rel(close.value, 2.1040424239716155018), 1e-13);
  ASSERT_TRUE(close.parameter);

  const DistanceSolution far = distance_C(canonicalize({0, 1}, {10, 4}));
  EXPECT_EQ(far.regime, Regime::CFar);
  EXPECT_LT(rel(far.value, 6.1766226146989802360), 1e-13);

  const DistanceSolution boundary = distance_C(canonicalize({0, 0}, {1, 0}));
  EXPECT_EQ(boundary.regime, Regime::Boundary);
  EXPECT_LT(rel(boundary.value, 2.0 * std::sqrt(pi)), 1e-13);

  const DistanceSolution vertical = distance_C(canonicalize({2, 1}, {2, 4}));
  EXPECT_EQ(vertical.regime, Regime::Vertical);
  EXPECT_EQ(vertical.value, 2.0);
}

TEST(DistanceC, TinyVariance) {
  const DistanceSolution s = distance_C(canonicalize({0, 1e-200}, {3, 1e-200}));
  EXPECT_LT(rel(s.value, 2.0 * std::sqrt(3.0 * pi)), 1e-10);
}

}  // namespace
}  // namespace hdist
