#include "mem/rootfind.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mem/errors.hpp"

namespace mem {

namespace {

// NaN never certifies a bracket; +-inf carries a usable sign.
bool opposite_sign(double a, double b) {
  if (std::isnan(a) || std::isnan(b)) return false;
  return (a <= 0.0 && b >= 0.0) || (a >= 0.0 && b <= 0.0);
}

}  // namespace

Bracket bracket_sign_change(const ScalarFn& f, double lo, double hi,
                            double wall_lo, double wall_hi) {
  if (!(lo < hi)) throw DomainError("bracket_sign_change: lo must be < hi");
  double flo = f(lo);
  double fhi = f(hi);
  double step = hi - lo;
  for (int round = 0; round < 60; ++round) {
    if (opposite_sign(flo, fhi)) return Bracket{lo, hi};
    step *= 2.0;
    // Push both endpoints outward: doubling steps on unconstrained sides,
    // geometric approach (never contact) toward finite walls.
    double nlo = std::isinf(wall_lo) ? lo - step : wall_lo + (lo - wall_lo) / 8.0;
    double nhi = std::isinf(wall_hi) ? hi + step : wall_hi - (wall_hi - hi) / 8.0;
    bool moved = false;
    if (nlo < lo) {
      lo = nlo;
      flo = f(lo);
      moved = true;
    }
    if (nhi > hi) {
      hi = nhi;
      fhi = f(hi);
      moved = true;
    }
    if (!moved) break;
  }
  if (opposite_sign(flo, fhi)) return Bracket{lo, hi};
  throw NoSignChange("bracket_sign_change: no sign change after expansion");
}

double solve_monotone(const ScalarFn& f, const std::optional<ScalarFn>& df,
                      Bracket bracket, double tol) {
  double a = bracket.lo, b = bracket.hi;
  if (!(a < b)) throw DomainError("solve_monotone: invalid bracket");
  double fa = f(a);
  double fb = f(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if (!opposite_sign(fa, fb)) {
    throw NoSignChange("solve_monotone: bracket endpoints have equal sign");
  }

  double x = 0.5 * (a + b);
  double fx = f(x);
  double prev_abs = std::abs(fx);
  for (int it = 0; it < 200; ++it) {
    if (std::abs(fx) <= tol) return x;
    // Shrink the bracket around the sign change.
    if (opposite_sign(fa, fx)) {
      b = x;
      fb = fx;
    } else {
      a = x;
      fa = fx;
    }
    if (b - a <= 1e-14 * std::max(1.0, std::abs(x))) return x;

    double cand = std::numeric_limits<double>::quiet_NaN();
    if (df) {
      double d = (*df)(x);
      if (std::isfinite(d) && d != 0.0) cand = x - fx / d;
    } else if (fb != fa) {
      cand = b - fb * (b - a) / (fb - fa);  // secant through the bracket
    }
    bool take_newton = std::isfinite(cand) && cand > a && cand < b;
    double xn = take_newton ? cand : 0.5 * (a + b);
    double fxn = f(xn);
    if (take_newton && !(std::abs(fxn) < prev_abs)) {
      // Newton/secant made no progress on |f|; fall back to bisection.
      xn = 0.5 * (a + b);
      fxn = f(xn);
    }
    x = xn;
    fx = fxn;
    prev_abs = std::abs(fx);
  }
  throw MaxIterations("solve_monotone: no convergence within 200 steps");
}

double lambert_w0(double x) {
  constexpr double inv_e = 0.36787944117144233;  // 1/e
  if (x < -inv_e) {
    if (x > -inv_e - 1e-12) {
      x = -inv_e;  // round-off at the branch point
    } else {
      throw DomainError("lambert_w0: argument below -1/e");
    }
  }
  if (x == 0.0) return 0.0;

  double w;
  if (x < 0.0) {
    // Series around the branch point w(-1/e) = -1.
    double p = std::sqrt(2.0 * (std::exp(1.0) * x + 1.0));
    w = -1.0 + p - p * p / 3.0 + 11.0 * p * p * p / 72.0;
    if (w >= 0.0) w = -1e-12;
  } else {
    w = std::log1p(x);
  }

  for (int it = 0; it < 64; ++it) {
    double ew = std::exp(w);
    double r = w * ew - x;
    if (std::abs(r) <= 1e-12 * std::max(1.0, std::abs(x))) return w;
    // Halley update.
    double denom = ew * (w + 1.0) - (w + 2.0) * r / (2.0 * w + 2.0);
    double wn = w - r / denom;
    if (!std::isfinite(wn)) break;
    if (std::abs(wn - w) <= 1e-16 * std::max(1.0, std::abs(w))) {
      w = wn;
      break;
    }
    w = wn;
  }
  double residual = w * std::exp(w) - x;
  if (std::abs(residual) <= 1e-10 * std::max(1.0, std::abs(x))) return w;
  throw NonConvergence("lambert_w0: Halley iteration stalled");
}

}  // namespace mem
