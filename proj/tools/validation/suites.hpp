#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hdist::validation {

struct SuiteResult {
  std::string name;
  bool passed = true;
  long cases = 0;
  long failures = 0;
  double max_error = 0.0;
  double tolerance = 0.0;
  std::string note;
};

/// Random Heston pair with v in [0, v_max] and |x1 - x0| <= dx_max.
struct PairSample {
  double x0, v0, x1, v1;
};
std::vector<PairSample> random_pairs(long n, std::uint64_t seed, double v_max = 10.0,
                                     double dx_max = 50.0);

/// Fixed worked examples with independently known values.
SuiteResult worked_examples();

/// |d_C - d_delta| / max(d, 1e-12) <= 1e-9.
SuiteResult cross_route(long n, std::uint64_t seed);

/// D <= d <= 12 D.
SuiteResult two_sided_bound(long n, std::uint64_t seed);

/// Bit-exact translation invariance on dyadic inputs, sqrt(alpha) scaling
/// for alpha in {0.25, 4} and the two swap identities, to 1e-10.
SuiteResult symmetry_scaling(long n, std::uint64_t seed);

/// Sampled monotonicity of F, Ftilde and f, and finite-difference convexity
/// of F and f, on n random variance pairs.
SuiteResult monotonicity(long n, std::uint64_t seed);

/// Every delta-far pair is C-far; C* from the far C-equation equals
/// C_of_delta(delta-hat) to 1e-9 relative.
SuiteResult delta_far_implies_c_far(long n, std::uint64_t seed);

/// grad Lambda against central differences on a grid_n x grid_n grid of
/// (-0.95 pi, 0.95 pi) x [-10, 10] for four fixed start points, to 1e-6
/// relative (with the exact value floored at 1 in the denominator).
SuiteResult lambda_gradient(int grid_n);

/// Closed-form Lambda* against the three-stage grid sup in the close branch
/// (1e-6 relative).
SuiteResult lambda_star_oracle_close(long n, std::uint64_t seed);

/// Far branch: the grid sup never exceeds the closed form by more than 1e-6,
/// and its distance to R1 does not grow under refinement.
SuiteResult lambda_star_oracle_far(long n, std::uint64_t seed);

/// d_G^2 / 2 = Lambda* to 1e-9 relative inside M.
SuiteResult half_d2_inside_M(long n, std::uint64_t seed);

/// d_G^2 / 2 - Lambda* > 0 in the far branch.
SuiteResult half_d2_far(long n, std::uint64_t seed);

/// Geodesic quadrature length against the closed-form distance (1e-6).
SuiteResult geodesic_quadrature(long n, std::uint64_t seed);

/// Observed order of the midpoint polyline length on dyadic refinement for
/// ten fixed pairs; passes at order >= 1.9.
SuiteResult polyline_order();

/// Every suite above, with n random cases each (0 keeps only the fixed ones).
std::vector<SuiteResult> run_all(long n_random, std::uint64_t seed);

}  // namespace hdist::validation
