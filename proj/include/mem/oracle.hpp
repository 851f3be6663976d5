#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "mem/expfam.hpp"
#include "mem/kernels.hpp"
#include "mem/models.hpp"

namespace mem {

// One line of ground-truth comparison. Relative error uses a
// max(1, |analytic|) denominator.
struct OracleReport {
  std::string quantity;
  double analytic = 0.0;
  double oracle = 0.0;
  double abs_err = 0.0;
  double rel_err = 0.0;
  bool pass = false;
};

OracleReport make_report(std::string quantity, double analytic, double oracle,
                         double tol);
void write_reports_csv(std::ostream& out,
                       const std::vector<OracleReport>& reports);

// Brute-force conjugate sup{ y theta - psi_P(theta) } for univariate
// distributions: bracket the concave maximum inside the natural parameter
// space, then golden-section to accuracy tol. BracketFailure when y sits on
// or outside the effective domain boundary.
double numeric_conjugate(const ReferenceDistribution& d, double y,
                         double tol = 1e-10);

// Central finite differences (one-sided with doubled step error near domain
// walls). f must be finite at x.
Vec fd_gradient(const std::function<double(const Vec&)>& f, const Vec& x,
                double step);

// Dense scalar minimization of t psi_R^*(u) + D_h(u, xbar) over
// int dom h cap dom psi_R^*, independent of the prox catalog: rate-function
// values come from numeric_conjugate, geometry from the kernel primitives.
double dense_prox_1d(KernelKind k, const ReferenceDistribution& prior,
                     double t, double xbar);

// Max violation of f(y) <= f(x) + <grad f(x), y - x> + L D_h(y, x) over
// sampled interior pairs.
OracleReport descent_lemma_check(const FidelityFamily& f, KernelKind k,
                                 double L, int samples, std::uint64_t seed);

}  // namespace mem
