#pragma once

// Internal scalar kernels shared by the distribution catalog. All functions
// here are branch-stabilized around removable singularities.

#include <cmath>

namespace mem::detail {

inline constexpr double kPi = 3.14159265358979323846;

// x log x with the 0 log 0 = 0 convention.
inline double xlogx(double x) { return x == 0.0 ? 0.0 : x * std::log(x); }

// x log y with the convention that the term vanishes when x = 0.
inline double xlogy(double x, double y) {
  return x == 0.0 ? 0.0 : x * std::log(y);
}

// e^u / (e^u - 1). Diverges like 1/u at u = 0; negative for u < 0.
inline double exp_ratio(double u) {
  if (u > 0.0) return 1.0 / (-std::expm1(-u));
  return std::exp(u) / std::expm1(u);
}

// 1/(1 - e^-u) - 1/u, the derivative of log((e^u - 1)/u). Removable
// singularity at 0 with value 1/2.
inline double exp_ratio_centered(double u) {
  if (std::abs(u) < 1e-4) return 0.5 + u / 12.0 - u * u * u / 720.0;
  return exp_ratio(u) - 1.0 / u;
}

// log((e^u - 1)/u), extended by 0 at u = 0.
inline double log_expm1_over(double u) {
  if (std::abs(u) < 1e-8) return 0.5 * u + u * u / 24.0;
  if (u > 700.0) return u - std::log(u) + std::log1p(-std::exp(-u));
  return std::log(std::expm1(u) / u);
}

// log((e^{n u} - 1)/(e^u - 1)) for n >= 2; extends to log(n) at u = 0.
inline double log_geometric_sum(double n, double u) {
  if (std::abs(n * u) < 1e-4) {
    return std::log(n) + (n - 1.0) * u / 2.0 + (n * n - 1.0) * u * u / 24.0;
  }
  if (u > 0.0) {
    return (n - 1.0) * u + std::log1p(-std::exp(-n * u)) -
           std::log1p(-std::exp(-u));
  }
  return std::log1p(-std::exp(n * u)) - std::log1p(-std::exp(u));
}

// log(v / sin(v)) for |v| < pi, extended by 0 at v = 0.
inline double log_v_over_sin(double v) {
  if (std::abs(v) < 1e-6) {
    double v2 = v * v;
    return v2 / 6.0 + v2 * v2 / 180.0;
  }
  return std::log(v / std::sin(v));
}

// 1/t - pi s / tan(pi s t) ... helper for the logistic catalog entries:
// derivative of log(v/sin v) with v = pi s theta, as a function of theta.
inline double logistic_psi_deriv(double s, double theta) {
  double c = kPi * s;
  if (std::abs(c * theta) < 1e-4) {
    double c2 = c * c;
    return c2 * theta / 3.0 + c2 * c2 * theta * theta * theta / 45.0;
  }
  return 1.0 / theta - c / std::tan(c * theta);
}

// Stable sqrt(1 + r^2) - 1.
inline double sqrt1p_sq_m1(double r) {
  double s = std::hypot(1.0, r);
  return r * r / (s + 1.0);
}

}  // namespace mem::detail
