#include "hestondist/cregime.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "hestondist/detail/trig_series.hpp"
#include "hestondist/errors.hpp"

namespace hdist {

namespace {

using std::numbers::pi;

constexpr double kSeriesSwitch = 1e-4;
constexpr double kApexSlack = 1e-12;

// |C| sqrt(v), clamped to 1 inside the rounding slack.
double scaled_root(double v, double C, const char* who) {
  double s = std::abs(C) * std::sqrt(v);
  if (s > 1.0) {
    if (s > 1.0 + kApexSlack) {
      throw DomainError(std::string(who) + ": C^2 v = " +
                        std::to_string(s * s) + " exceeds 1");
    }
    s = 1.0;
  }
  return s;
}

void check_variances(double v0, double v1, const char* who) {
  if (v0 < 0.0 || v1 < 0.0 || !std::isfinite(v0) || !std::isfinite(v1)) {
    throw DomainError(std::string(who) + ": variances must be non-negative");
  }
}

// Per-point term of Ftilde, times C^2. Both parts are non-negative.
double ftilde_term(double s) { return std::acos(s) + s * std::sqrt(1.0 - s * s); }

}  // namespace

double fbar(double v, double C) {
  if (v < 0.0) throw DomainError("fbar: negative variance");
  if (v == 0.0 || C == 0.0) return 0.0;
  const double s = scaled_root(v, C, "fbar");
  const double sign = C < 0.0 ? -1.0 : 1.0;
  const double c = std::abs(C);
  if (s < kSeriesSwitch) {
    const double c2v = c * c * v;
    const double v32 = v * std::sqrt(v);
    return sign * c * v32 * (2.0 / 3.0 + c2v * (0.2 + c2v * 3.0 / 28.0));
  }
  // asin(s)/C^2 - s sqrt(1-s^2)/C^2 = (phi - sin phi) / (2 C^2), phi = 2 asin s.
  const double phi = 2.0 * std::asin(s);
  return sign * detail::x_minus_sin(phi) / (2.0 * c * c);
}

double fbar_dC(double v, double C) {
  if (v < 0.0) throw DomainError("fbar_dC: negative variance");
  if (v == 0.0) return 0.0;
  if (C == 0.0) return 2.0 / 3.0 * v * std::sqrt(v);
  const double s = scaled_root(v, C, "fbar_dC");
  if (s == 1.0) return std::numeric_limits<double>::infinity();
  const double c = std::abs(C);
  if (s < kSeriesSwitch) {
    const double c2v = c * c * v;
    return v * std::sqrt(v) * (2.0 / 3.0 + c2v * (0.6 + c2v * 15.0 / 28.0));
  }
  // 2 (tan(theta) - theta) / C^3 with theta = asin(s).
  const double theta = std::asin(s);
  const double tan_minus = detail::sin_minus_x_cos(theta) / std::sqrt(1.0 - s * s);
  return 2.0 * tan_minus / (c * c * c);
}

double F(double v0, double v1, double C) {
  check_variances(v0, v1, "F");
  if (C == 0.0) return 0.0;
  return fbar(v1, C) - fbar(v0, C);
}

double F_dC(double v0, double v1, double C) {
  check_variances(v0, v1, "F_dC");
  return fbar_dC(v1, C) - fbar_dC(v0, C);
}

double Ftilde(double v0, double v1, double C) {
  check_variances(v0, v1, "Ftilde");
  if (!(C > 0.0)) throw DomainError("Ftilde: C must be positive");
  const double s0 = scaled_root(v0, C, "Ftilde");
  const double s1 = scaled_root(v1, C, "Ftilde");
  return (ftilde_term(s0) + ftilde_term(s1)) / (C * C);
}

double Ftilde_dC(double v0, double v1, double C) {
  check_variances(v0, v1, "Ftilde_dC");
  if (!(C > 0.0)) throw DomainError("Ftilde_dC: C must be positive");
  auto term = [&](double v) {
    const double s = scaled_root(v, C, "Ftilde_dC");
    if (s == 1.0) return -std::numeric_limits<double>::infinity();
    return -2.0 * (std::acos(s) + s / std::sqrt(1.0 - s * s)) / (C * C * C);
  };
  return term(v0) + term(v1);
}

double c_threshold(double v0, double v1) {
  check_variances(v0, v1, "c_threshold");
  const double lo = std::min(v0, v1);
  const double hi = std::max(v0, v1);
  if (hi == 0.0 || lo == hi) return 0.0;
  return std::sqrt(lo * (hi - lo)) + hi * std::acos(std::sqrt(lo / hi));
}

CClassification classify_C(const CanonicalPair& pair) {
  CClassification out;
  out.threshold = c_threshold(pair.v_min(), pair.v_max());
  const double dx = pair.dx();
  if (out.threshold == 0.0) {
    out.kind = CKind::CFar;
  } else if (std::abs(dx - out.threshold) <= kOnThresholdBand * out.threshold) {
    out.kind = CKind::OnThreshold;
  } else {
    out.kind = dx < out.threshold ? CKind::CClose : CKind::CFar;
  }
  return out;
}

RootResult solve_C_close(const CanonicalPair& pair, const SolverConfig& config) {
  const double v0 = pair.v_min();
  const double v1 = pair.v_max();
  const double dx = pair.dx();
  if (!(v1 > v0) || !(dx > 0.0)) {
    throw DomainError("solve_C_close: needs v1 > v0 and dx > 0");
  }
  const double c_max = 1.0 / std::sqrt(v1);
  const double threshold = c_threshold(v0, v1);
  if (dx > threshold * (1.0 + kOnThresholdBand)) {
    throw DomainError("solve_C_close: pair is C-far");
  }
  if (dx >= threshold) {
    RootResult r;
    r.root = c_max;
    r.residual = threshold - dx;
    r.converged = true;
    r.final_bracket = {c_max, c_max};
    return r;
  }
  auto g = [&](double C) { return F(v0, v1, C); };
  auto gp = [&](double C) { return F_dC(v0, v1, C); };
  RootResult r = solve_monotone(g, gp, {0.0, c_max}, dx, config);
  if (!r.converged) {
    throw SolverFailure("solve_C_close: no convergence after " +
                        std::to_string(r.iterations) + " iterations");
  }
  return r;
}

RootResult solve_C_far(const CanonicalPair& pair, const SolverConfig& config) {
  const double v0 = pair.v_min();
  const double v1 = pair.v_max();
  const double dx = pair.dx();
  if (!(dx > 0.0)) throw DomainError("solve_C_far: needs dx > 0");
  const double threshold = c_threshold(v0, v1);
  if (dx < threshold * (1.0 - kOnThresholdBand)) {
    throw DomainError("solve_C_far: pair is C-close");
  }
  auto g = [&](double C) { return Ftilde(v0, v1, C); };
  auto gp = [&](double C) { return Ftilde_dC(v0, v1, C); };

  // Ftilde <= pi / C^2, so sqrt(2 pi / dx) always sits below the target.
  const double c_max = v1 > 0.0 ? 1.0 / std::sqrt(v1) : std::sqrt(2.0 * pi / dx);
  const double interior = std::min(c_max, std::sqrt(2.0 * pi / dx));
  if (v1 > 0.0 && dx <= threshold) {
    RootResult r;
    r.root = c_max;
    r.residual = threshold - dx;
    r.converged = true;
    r.final_bracket = {c_max, c_max};
    return r;
  }
  const Bracket b = bracket_from_open_endpoint(g, 0.0, interior, dx);
  if (b.lo == b.hi) {
    RootResult r;
    r.root = b.lo;
    r.converged = true;
    r.final_bracket = b;
    return r;
  }
  RootResult r = solve_monotone(g, gp, b, dx, config);
  if (!r.converged) {
    throw SolverFailure("solve_C_far: no convergence after " +
                        std::to_string(r.iterations) + " iterations");
  }
  return r;
}

DistanceSolution distance_C(const CanonicalPair& pair, const SolverConfig& config) {
  DistanceSolution out;
  const double v0 = pair.v_min();
  const double v1 = pair.v_max();
  if (pair.vertical()) {
    out.value = vertical_distance(v0, v1);
    out.regime = Regime::Vertical;
    return out;
  }

  const CClassification cls = classify_C(pair);
  auto close_formula = [&](double C) {
    return 2.0 * (std::asin(scaled_root(v1, C, "distance_C")) -
                  std::asin(scaled_root(v0, C, "distance_C"))) / C;
  };
  auto far_formula = [&](double C) {
    return 2.0 * (std::acos(scaled_root(v0, C, "distance_C")) +
                  std::acos(scaled_root(v1, C, "distance_C"))) / C;
  };

  RootResult r;
  switch (cls.kind) {
    case CKind::OnThreshold: {
      // Apex configuration: both formulas hold at C = v_max^-1/2.
      const double C = 1.0 / std::sqrt(v1);
      r.root = C;
      r.residual = cls.threshold - pair.dx();
      r.converged = true;
      out.value = 0.5 * (close_formula(C) + far_formula(C));
      out.regime = Regime::CClose;
      break;
    }
    case CKind::CClose:
      r = solve_C_close(pair, config);
      out.value = close_formula(r.root);
      out.regime = Regime::CClose;
      break;
    case CKind::CFar:
      r = solve_C_far(pair, config);
      out.value = far_formula(r.root);
      out.regime = Regime::CFar;
      break;
  }
  if (v1 == 0.0) {
    out.regime = Regime::Boundary;
    out.diagnostics.secondary_regime = Regime::CFar;
  }
  out.parameter = r.root;
  out.diagnostics.iterations = r.iterations;
  out.diagnostics.residual = r.residual;
  out.diagnostics.converged = r.converged;
  return out;
}

}  // namespace hdist
