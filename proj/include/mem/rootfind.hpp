#pragma once

#include <functional>
#include <optional>

namespace mem {

// Sign-changing interval for a scalar root. lo < hi and f(lo), f(hi) have
// opposite sign (one endpoint may evaluate exactly to zero).
struct Bracket {
  double lo;
  double hi;
};

using ScalarFn = std::function<double(double)>;

// Expands [lo, hi] geometrically until f changes sign, without stepping past
// the walls (use -inf/+inf for unconstrained sides). Finite walls are
// approached geometrically and never touched. Throws NoSignChange after 60
// expansion rounds.
Bracket bracket_sign_change(const ScalarFn& f, double lo, double hi,
                            double wall_lo, double wall_hi);

// Safeguarded Newton for a continuous, strictly monotone f with a certified
// bracket. A Newton step is rejected (bisection substituted) when it leaves
// the current bracket or fails to decrease |f|; without df the secant step
// plays the same role. Returns x with |f(x)| <= tol or bracket width below
// 1e-14 * max(1, |x|). Throws MaxIterations after 200 steps.
double solve_monotone(const ScalarFn& f, const std::optional<ScalarFn>& df,
                      Bracket bracket, double tol);

// Principal branch of the Lambert W function: w * exp(w) = x for x >= -1/e,
// w >= -1. Halley iteration to relative residual 1e-12.
double lambert_w0(double x);

}  // namespace mem
