#include "mem/solvers.hpp"

#include <cmath>
#include <limits>

#include "mem/errors.hpp"
#include "mem/rootfind.hpp"

namespace mem {

namespace {

double resolve_step(const Problem& p, const SolverOptions& opts) {
  double L = p.smoothness_override ? *p.smoothness_override
                                   : smoothness_constant(p.fidelity);
  if (!(L > 0.0)) throw StepSizeError("solvers: smoothness constant is zero");
  double cap = 1.0 / L;
  if (opts.step == 0.0) return cap;
  if (!(opts.step > 0.0)) throw StepSizeError("solvers: step must be positive");
  if (opts.step > cap * (1.0 + 1e-12)) {
    throw StepSizeError("solvers: step must lie in (0, 1/L]");
  }
  return opts.step;
}

void check_start(const Problem& p, const Vec& x0) {
  if (kernel_domain_contains(p.kernel, x0) != Region::interior) {
    throw DomainError("solvers: x0 must lie in int dom h");
  }
  if (!std::isfinite(objective(p, x0))) {
    throw DomainError("solvers: objective must be finite at x0");
  }
}

void maybe_record(SolverTrace& trace, const SolverOptions& opts, int k,
                  double objective, double residual, double change,
                  bool force) {
  if (force || opts.trace_stride <= 1 || k % opts.trace_stride == 0) {
    trace.points.push_back(TracePoint{k, objective, residual, change});
  }
}

double rel_change(const Vec& xn, const Vec& x) {
  return (xn - x).norm() / std::max(1.0, x.norm());
}

}  // namespace

SolverTrace bpg(const Problem& p, Vec x0, const SolverOptions& opts) {
  if (p.reg && p.reg->L) {
    throw Unsupported(
        "solvers: composite regularizers require a primal-dual method");
  }
  check_start(p, x0);
  const double t = resolve_step(p, opts);
  const double tg = p.reg ? t * p.reg->weight : 0.0;

  SolverTrace trace;
  trace.step = t;
  Vec x = std::move(x0);
  double fval = objective(p, x);
  maybe_record(trace, opts, 0, fval, 0.0, 0.0, true);

  for (int k = 1; k <= opts.max_iters; ++k) {
    Vec g = fidelity_grad(p.fidelity, x);
    Vec z = kernel_grad(p.kernel, x) - t * g;
    Vec xb = kernel_grad_conj(p.kernel, z);

    Vec xn;
    double residual;
    if (p.reg) {
      ProxResult pr = p.reg->prior.prox(p.kernel, tg, xb);
      xn = std::move(pr.x);
      residual = pr.residual;
    } else {
      xn = std::move(xb);
      residual = fidelity_grad(p.fidelity, xn).lpNorm<Eigen::Infinity>();
    }

    double fn = objective(p, xn);
    double change = rel_change(xn, x);
    double obj_change = std::abs(fn - fval) / std::max(1.0, std::abs(fval));
    bool converged = change < opts.tol && obj_change < opts.tol;
    bool last = converged || k == opts.max_iters;
    maybe_record(trace, opts, k, fn, residual, change, last);

    x = std::move(xn);
    fval = fn;
    trace.iterations = k;
    if (converged) {
      trace.reason = StopReason::converged;
      break;
    }
  }
  trace.x = std::move(x);
  return trace;
}

SolverTrace fista(const Problem& p, Vec x0, const SolverOptions& opts) {
  if (p.kernel != KernelKind::energy) {
    throw Unsupported("solvers: fista requires the energy kernel");
  }
  if (p.reg && p.reg->L) {
    throw Unsupported(
        "solvers: composite regularizers require a primal-dual method");
  }
  check_start(p, x0);
  const double t = resolve_step(p, opts);
  const double tg = p.reg ? t * p.reg->weight : 0.0;

  SolverTrace trace;
  trace.step = t;
  Vec x = x0;
  Vec y = std::move(x0);
  double mom = 1.0;
  double fval = objective(p, x);
  maybe_record(trace, opts, 0, fval, 0.0, 0.0, true);

  auto forward = [&](const Vec& at, double* residual) {
    Vec xb = at - t * fidelity_grad(p.fidelity, at);
    if (!p.reg) {
      *residual = fidelity_grad(p.fidelity, xb).lpNorm<Eigen::Infinity>();
      return xb;
    }
    ProxResult pr = p.reg->prior.prox(KernelKind::energy, tg, xb);
    *residual = pr.residual;
    return pr.x;
  };

  for (int k = 1; k <= opts.max_iters; ++k) {
    double residual;
    Vec xn = forward(y, &residual);
    double fn = objective(p, xn);
    if (fn > fval) {
      // restart: drop the momentum and take a plain proximal gradient step
      mom = 1.0;
      xn = forward(x, &residual);
      fn = objective(p, xn);
    }
    double mom_next = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * mom * mom));
    y = xn + ((mom - 1.0) / mom_next) * (xn - x);
    mom = mom_next;

    double change = rel_change(xn, x);
    double obj_change = std::abs(fn - fval) / std::max(1.0, std::abs(fval));
    bool converged = change < opts.tol && obj_change < opts.tol;
    bool last = converged || k == opts.max_iters;
    maybe_record(trace, opts, k, fn, residual, change, last);

    x = std::move(xn);
    fval = fn;
    trace.iterations = k;
    if (converged) {
      trace.reason = StopReason::converged;
      break;
    }
  }
  trace.x = std::move(x);
  return trace;
}

namespace {

// Conjugate gradients on the SPD system (I + tau A'A) x = rhs.
Vec cg_identity_plus(const LinearOperator& a, double tau, const Vec& rhs,
                     const Vec& x_init) {
  auto matvec = [&](const Vec& v) { return Vec(v + tau * a.adjoint(a.apply(v))); };
  Vec x = x_init;
  Vec r = rhs - matvec(x);
  Vec d = r;
  double rr = r.squaredNorm();
  const double stop = 1e-20 * std::max(1.0, rhs.squaredNorm());
  const Eigen::Index max_it = 5 * rhs.size();
  for (Eigen::Index it = 0; it < max_it && rr > stop; ++it) {
    Vec ad = matvec(d);
    double alpha = rr / d.dot(ad);
    x += alpha * d;
    r -= alpha * ad;
    double rr_new = r.squaredNorm();
    d = r + (rr_new / rr) * d;
    rr = rr_new;
  }
  return x;
}

}  // namespace

SolverTrace chambolle_pock_nig_tv(const LinearOperator& a, const Vec& yhat,
                                  Eigen::Index height, Eigen::Index width,
                                  double delta, double s, double tau, Vec x0,
                                  const SolverOptions& opts) {
  const Eigen::Index d = height * width;
  if (a.cols() != d || a.rows() != yhat.size() || x0.size() != d) {
    throw DomainError("solvers: chambolle-pock dimension mismatch");
  }
  if (!(delta > 0.0) || !(s > 0.0) || !(tau > 0.0)) {
    throw DomainError("solvers: chambolle-pock parameters must be positive");
  }
  LinearOperator L = LinearOperator::finite_difference_2d(height, width);
  double nL = op_norm_2(L);
  if (s * tau * nL * nL >= 1.0) {
    throw StepSizeError("solvers: need s * tau * ||L||_2^2 < 1");
  }

  auto primal_objective = [&](const Vec& x) {
    Vec lx = L.apply(x);
    double reg = 0.0;
    for (Eigen::Index i = 0; i < d; ++i) {
      reg += std::hypot(delta, lx.segment(2 * i, 2).norm()) - delta;
    }
    return 0.5 * (a.apply(x) - yhat).squaredNorm() + reg;
  };

  SolverTrace trace;
  trace.step = tau;
  Vec x = std::move(x0);
  Vec z = x;
  Vec y = Vec::Zero(2 * d);
  double fval = primal_objective(x);
  maybe_record(trace, opts, 0, fval, 0.0, 0.0, true);

  const double sd = s * delta;
  const std::optional<ScalarFn> no_deriv{};

  for (int k = 1; k <= opts.max_iters; ++k) {
    // dual ascent on the pixel blocks
    Vec v = y + s * L.apply(z);
    double rho_resid = 0.0;
    for (Eigen::Index i = 0; i < d; ++i) {
      double vn = v.segment(2 * i, 2).norm();
      double rho;
      if (vn == 0.0) {
        rho = 1.0 / sd;  // the rho-equation reduces to (rho s delta)^2 = 1
      } else {
        auto g = [&](double r) {
          double frac = r / (1.0 + r);
          return r * r * sd * sd + frac * frac * vn * vn - 1.0;
        };
        ScalarFn dg = [&](double r) {
          double u = 1.0 + r;
          return 2.0 * r * sd * sd + 2.0 * r / (u * u * u) * vn * vn;
        };
        rho = solve_monotone(g, dg, Bracket{0.0, 1.0 / sd}, 1e-13);
        rho_resid = std::max(rho_resid, std::abs(g(rho)));
      }
      y.segment(2 * i, 2) = (rho / (1.0 + rho)) * v.segment(2 * i, 2);
    }

    // primal step: (I + tau A'A) x+ = x - tau (L'y - A'yhat)
    Vec rhs = x - tau * (L.adjoint(y) - a.adjoint(yhat));
    Vec xn = cg_identity_plus(a, tau, rhs, x);
    z = 2.0 * xn - x;

    double fn = primal_objective(xn);
    double change = rel_change(xn, x);
    double obj_change = std::abs(fn - fval) / std::max(1.0, std::abs(fval));
    bool converged = change < opts.tol && obj_change < opts.tol;
    bool last = converged || k == opts.max_iters;
    maybe_record(trace, opts, k, fn, rho_resid, change, last);

    x = std::move(xn);
    fval = fn;
    trace.iterations = k;
    if (converged) {
      trace.reason = StopReason::converged;
      break;
    }
  }
  trace.x = std::move(x);
  return trace;
}

}  // namespace mem
