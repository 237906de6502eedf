#pragma once

#include <functional>
#include <utility>

namespace hdist {

struct SolverConfig {
  double abs_tol = 1e-13;
  double rel_tol = 1e-12;
  /// Residual tolerance relative to max(|target|, tiny).
  double residual_tol = 1e-11;
  int max_iter = 200;

  void validate() const;
};

struct Bracket {
  double lo = 0.0;
  double hi = 0.0;
};

struct RootResult {
  double root = 0.0;
  double residual = 0.0;  ///< g(root) - target
  int iterations = 0;
  bool converged = false;
  Bracket final_bracket;
};

using ScalarFn = std::function<double(double)>;

/// Solves g(x) = target for g continuous and strictly monotone on the
/// bracket. When g_prime is given, Newton steps are taken while they stay
/// inside the current bracket and shrink it fast enough; otherwise an
/// Illinois secant step is used, with bisection as the fallback.
///
/// Throws NoSignChange when g - target has the same strict sign at both
/// ends. Running out of iterations returns the best estimate with
/// converged = false.
RootResult solve_monotone(const ScalarFn& g, const ScalarFn& g_prime,
                          Bracket bracket, double target,
                          const SolverConfig& config = {});

/// Finds a finite bracket around g(x) = target when the root lies between
/// interior_point and an endpoint where g is undefined or diverges. Moves
/// toward open_end by halving the remaining distance until the sign of
/// g - target flips. Returns (interior, interior) if the target is hit
/// exactly at interior_point. Throws MaxIterations after max_halvings.
Bracket bracket_from_open_endpoint(const ScalarFn& g, double open_end,
                                   double interior_point, double target,
                                   int max_halvings = 200);

}  // namespace hdist
