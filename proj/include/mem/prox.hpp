#pragma once

#include "mem/cramer.hpp"
#include "mem/expfam.hpp"
#include "mem/kernels.hpp"

namespace mem {

// Request for prox^h_{t psi_R^*}(xbar). xbar must lie in int dom h and the
// kernel must be compatible with the prior (int dom h and dom psi_R^* must
// intersect).
struct ProxRequest {
  KernelKind kernel;
  ReferenceDistribution prior;
  double t;
  Vec xbar;
};

struct ProxResult {
  Vec x;           // the proximal point x+
  Vec theta;       // dual point: grad h(xbar) - grad h(x+)
  double residual; // first-order residual, sup norm
};

// Bregman proximal operator catalog. Closed forms where the tables provide
// one; monotone scalar roots elsewhere. Univariate priors are applied
// componentwise to xbar.
ProxResult bregman_prox(const ProxRequest& req);

// || grad h(x+) - grad h(xbar) + t grad psi_R^*(x+) ||_inf, re-evaluating the
// rate-function gradient independently of the solve path.
double prox_residual(const ProxRequest& req, const Vec& xplus);

// Dual solution theta+ = grad h(xbar) - grad h(x+); x+ is recoverable as
// grad h^*(grad h(xbar) - theta+).
Vec dual_prox_theta(KernelKind k, const ReferenceDistribution& prior, double t,
                    const Vec& xbar);

}  // namespace mem
