#pragma once

#include <vector>

#include "mem/models.hpp"

namespace mem {

struct SolverOptions {
  int max_iters = 500;
  double step = 0.0;  // 0: auto, t = 1/L
  double tol = 1e-9;  // on relative iterate change and objective change
  int trace_stride = 1;
};

enum class StopReason { converged, max_iterations };

struct TracePoint {
  int k;
  double objective;
  double residual;
  double change;
};

struct SolverTrace {
  std::vector<TracePoint> points;
  Vec x;
  StopReason reason = StopReason::max_iterations;
  int iterations = 0;
  double step = 0.0;
};

// Bregman proximal gradient:
//   x+ = prox^h_{t g}( grad h^*( grad h(x) - t grad f(x) ) ),
// t in (0, 1/L]. Objectives are monotone nonincreasing. Composite
// regularizers (with an L operator) are rejected.
SolverTrace bpg(const Problem& p, Vec x0, const SolverOptions& opts);

// FISTA acceleration of the Energy-kernel case, with restart on objective
// increase. Unsupported for other kernels.
SolverTrace fista(const Problem& p, Vec x0, const SolverOptions& opts);

// Chambolle-Pock specialized to pseudo-Huber total variation deblurring
// (normal-inverse Gaussian differences prior with mu = beta = 0, alpha = 1,
// Sigma = I). The dual y-blocks solve a per-pixel scalar rho equation; the
// x-update solves (I + tau A'A) by conjugate gradients. Requires
// s * tau * ||L||_2^2 < 1.
SolverTrace chambolle_pock_nig_tv(const LinearOperator& a, const Vec& yhat,
                                  Eigen::Index height, Eigen::Index width,
                                  double delta, double s, double tau, Vec x0,
                                  const SolverOptions& opts);

}  // namespace mem
