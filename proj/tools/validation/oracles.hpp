#pragma once

#include <array>

namespace hdist::validation {

/// Brute-force Legendre-Fenchel transform
/// sup_{delta, gamma} [delta x1 + gamma y1 - Lambda(delta, gamma; x0, y0)]
/// over (-pi, pi) x [-G, G] with G = 2 pi (|y0| + |y1|) + 1.
///
/// Stage 0 is a 201 x 201 grid; each later stage puts a new 201 x 201 grid on
/// the window of +-10 cells of the previous stage around its argmax.
struct GridSupResult {
  std::array<double, 3> stages{};  ///< sup after each stage
  double delta = 0.0;
  double gamma = 0.0;

  double value() const { return stages[2]; }
};

GridSupResult lambda_star_grid(double x0, double y0, double x1, double y1);

}  // namespace hdist::validation
