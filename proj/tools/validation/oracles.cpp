#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "hestondist/grushin.hpp"

namespace hdist::validation {

namespace {

using std::numbers::pi;

constexpr int kNodes = 201;
constexpr double kWindowCells = 10.0;

}  // namespace

GridSupResult lambda_star_grid(double x0, double y0, double x1, double y1) {
  GridSupResult out;
  const double gamma_max = 2.0 * pi * (std::abs(y0) + std::abs(y1)) + 1.0;
  // Lambda is infinite at |delta| = pi; stay just inside the strip.
  const double d_edge = std::nextafter(pi, 0.0);

  double d_lo = -d_edge;
  double d_hi = d_edge;
  double g_lo = -gamma_max;
  double g_hi = gamma_max;
  double best = -std::numeric_limits<double>::infinity();

  for (int stage = 0; stage < 3; ++stage) {
    const double dd = (d_hi - d_lo) / (kNodes - 1);
    const double dg = (g_hi - g_lo) / (kNodes - 1);
    for (int i = 0; i < kNodes; ++i) {
      const double d = d_lo + i * dd;
      for (int j = 0; j < kNodes; ++j) {
        const double g = g_lo + j * dg;
        const double val = d * x1 + g * y1 - lambda(d, g, x0, y0);
        if (val > best) {
          best = val;
          out.delta = d;
          out.gamma = g;
        }
      }
    }
    out.stages[stage] = best;
    d_lo = std::max(-d_edge, out.delta - kWindowCells * dd);
    d_hi = std::min(d_edge, out.delta + kWindowCells * dd);
    g_lo = out.gamma - kWindowCells * dg;
    g_hi = out.gamma + kWindowCells * dg;
  }
  return out;
}

}  // namespace hdist::validation
