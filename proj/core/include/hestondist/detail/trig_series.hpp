#pragma once

#include <cmath>

// Cancellation-free forms of small differences of trigonometric terms.
namespace hdist::detail {

/// x - sin(x); Taylor series below |x| = 1 where the subtraction loses digits.
inline double x_minus_sin(double x) {
  const double ax = std::abs(x);
  if (ax >= 1.0) return x - std::sin(x);
  const double x2 = x * x;
  double term = x * x2 / 6.0;
  double sum = term;
  for (int k = 2; k < 30; ++k) {
    term *= -x2 / ((2.0 * k) * (2.0 * k + 1.0));
    sum += term;
    if (std::abs(term) <= 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

/// sin(h) - h cos(h) = sum_{k>=1} (-1)^(k+1) 2k h^(2k+1) / (2k+1)!.
inline double sin_minus_x_cos(double h) {
  if (std::abs(h) >= 1.0) return std::sin(h) - h * std::cos(h);
  const double h2 = h * h;
  double pw = h * h2 / 6.0;  // h^(2k+1) / (2k+1)! with k = 1
  double sum = 2.0 * pw;
  for (int k = 2; k < 30; ++k) {
    pw *= -h2 / ((2.0 * k) * (2.0 * k + 1.0));
    const double term = 2.0 * k * pw;
    sum += term;
    if (std::abs(term) <= 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

/// x / sin(x), with the even series near 0.
inline double x_over_sin(double x) {
  if (std::abs(x) < 1e-4) {
    const double x2 = x * x;
    return 1.0 + x2 / 6.0 + 7.0 * x2 * x2 / 360.0;
  }
  return x / std::sin(x);
}

/// tan(x) / x, with the even series near 0.
inline double tan_over_x(double x) {
  if (std::abs(x) < 1e-3) {
    const double x2 = x * x;
    return 1.0 + x2 * (1.0 / 3.0 + x2 * (2.0 / 15.0 + x2 * 17.0 / 315.0));
  }
  return std::tan(x) / x;
}

}  // namespace hdist::detail
