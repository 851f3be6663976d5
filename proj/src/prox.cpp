#include "mem/prox.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "mem/errors.hpp"
#include "mem/rootfind.hpp"
#include "numerics.hpp"

namespace mem {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
const std::optional<ScalarFn> kNoDeriv{};

// ---- compatibility --------------------------------------------------------

// int dom h and dom psi_R^* must intersect (prox well-definedness); the
// entropy/Burg kernels additionally exclude priors whose domain misses the
// positive orthant.
void check_compat(KernelKind k, const ReferenceDistribution& R) {
  if (k == KernelKind::energy) return;
  const auto& v = R.value();
  if (const auto* m = std::get_if<dist::NegativeMultinomial>(&v)) {
    if ((m->p.array() == 0.0).any()) {
      throw DomainError(
          "prox: NegativeMultinomial under a non-Energy kernel requires "
          "p_i > 0");
    }
  }
  if (const auto* u = std::get_if<dist::DiscreteUniform>(&v)) {
    if (u->b < 1) {
      throw DomainError(
          "prox: DiscreteUniform under a non-Energy kernel requires b >= 1");
    }
    if (u->a == u->b && u->a < 1) {
      throw DomainError("prox: degenerate DiscreteUniform support must be "
                        "positive under this kernel");
    }
  }
  if (const auto* u = std::get_if<dist::ContinuousUniform>(&v)) {
    if (u->b <= 0.0) {
      throw DomainError(
          "prox: ContinuousUniform under a non-Energy kernel requires b > 0");
    }
    if (u->a == u->b && u->a <= 0.0) {
      throw DomainError("prox: degenerate ContinuousUniform support must be "
                        "positive under this kernel");
    }
  }
}

// ---- generic scalar machinery ----------------------------------------------

// Root of g(u) = grad h(u) - grad h(xbar) + t * grad psi_R^*(u) on the open
// interval (wall_lo, wall_hi) = int dom h cap int dom psi_R^*. g is strictly
// increasing, so a sign-certified bracket always exists for well-posed
// requests.
double primal_root(KernelKind k, const ReferenceDistribution& R, double t,
                   double xbar, double wall_lo, double wall_hi) {
  const double gbar = kernel_grad1(k, xbar);
  auto g = [&](double u) {
    return kernel_grad1(k, u) - gbar + t * cramer_grad1(R, u);
  };
  double lo_seed, hi_seed;
  if (std::isinf(wall_lo) && std::isinf(wall_hi)) {
    double c = std::abs(xbar) + 1.0;
    lo_seed = xbar - 0.5 * c;
    hi_seed = xbar + 0.5 * c;
  } else if (std::isinf(wall_hi)) {
    double base = std::max(xbar, wall_lo + 1.0);
    lo_seed = wall_lo + 0.5 * (base - wall_lo);
    hi_seed = wall_lo + 1.5 * (base - wall_lo);
  } else {
    double mid = 0.5 * (wall_lo + wall_hi), w = wall_hi - wall_lo;
    lo_seed = mid - w / 8.0;
    hi_seed = mid + w / 8.0;
  }
  Bracket br;
  try {
    br = bracket_sign_change(g, lo_seed, hi_seed, wall_lo, wall_hi);
  } catch (const NoSignChange&) {
    throw RootFailure("prox: could not certify a bracket for the scalar "
                      "stationarity equation");
  }
  return solve_monotone(g, kNoDeriv, br,
                        1e-12 * std::max(1.0, std::abs(gbar)));
}

// Recovery map of the dual route: x+(theta) = grad h^*(grad h(xbar) - t theta).
double dual_recover(KernelKind k, double xbar, double t, double theta) {
  switch (k) {
    case KernelKind::energy:
      return xbar - t * theta;
    case KernelKind::boltzmann_shannon:
      return xbar * std::exp(-t * theta);
    case KernelKind::burg:
      return xbar / (1.0 + t * xbar * theta);
  }
  return 0.0;
}

// Root of M(theta) = grad psi_R(theta) - x+(theta) over int Theta_R
// (intersected with the Burg recovery constraint t xbar theta > -1).
// M is strictly increasing: grad psi_R is, and the recovery map decreases
// in theta. Used for the uniform and logistic rows, whose rate-function
// gradients are themselves implicit.
double dual_root(KernelKind k, const ReferenceDistribution& R, double t,
                 double xbar, double theta_wall_lo, double theta_wall_hi) {
  double wall_lo = theta_wall_lo;
  double wall_hi = theta_wall_hi;
  if (k == KernelKind::burg) {
    wall_lo = std::max(wall_lo, -1.0 / (t * xbar));
  }
  auto m = [&](double th) {
    return log_normalizer_grad1(R, th) - dual_recover(k, xbar, t, th);
  };
  // theta = 0 is always admissible (wall_lo < 0 < wall_hi); keep the seed
  // bracket strictly inside the walls
  double room_lo = std::isinf(wall_lo) ? 1.0 : -wall_lo;
  double room_hi = std::isinf(wall_hi) ? 1.0 : wall_hi;
  double seed = 0.125 * std::min({1.0, room_lo, room_hi});
  Bracket br;
  try {
    br = bracket_sign_change(m, -seed, seed, wall_lo, wall_hi);
  } catch (const NoSignChange&) {
    throw RootFailure("prox: could not certify a bracket for the dual "
                      "stationarity equation");
  }
  return solve_monotone(m, kNoDeriv, br, 1e-12 * std::max(1.0, std::abs(xbar)));
}

// ---- closed forms ----------------------------------------------------------

double prox_normal_1d(KernelKind k, double mu, double var, double t,
                      double xbar) {
  switch (k) {
    case KernelKind::energy:
      return (var * xbar + t * mu) / (t + var);
    case KernelKind::boltzmann_shannon: {
      double r = t / var;
      return lambert_w0(r * xbar * std::exp(t * mu / var)) / r;
    }
    case KernelKind::burg: {
      double r = t / var;
      double c = r * mu - 1.0 / xbar;
      double root = std::sqrt(c * c + 4.0 * r);
      // positive quadratic branch, cancellation-free for either sign of c
      return c >= 0.0 ? (c + root) / (2.0 * r) : 2.0 / (root - c);
    }
  }
  return 0.0;
}

double prox_gamma_1d(KernelKind k, const dist::Gamma& g, double t,
                     double xbar) {
  switch (k) {
    case KernelKind::energy: {
      double c = xbar - t * g.beta;
      double root = std::sqrt(c * c + 4.0 * t * g.alpha);
      return c >= 0.0 ? 0.5 * (c + root) : 2.0 * t * g.alpha / (root - c);
    }
    case KernelKind::boltzmann_shannon: {
      double at = g.alpha * t;
      return at / lambert_w0(at * std::exp(t * g.beta) / xbar);
    }
    case KernelKind::burg:
      return xbar * (t * g.alpha + 1.0) / (xbar * t * g.beta + 1.0);
  }
  return 0.0;
}

double prox_poisson_1d(KernelKind k, const ReferenceDistribution& R,
                       double lambda, double t, double xbar) {
  switch (k) {
    case KernelKind::energy:
      if (xbar / t > 600.0) {
        // W-form would overflow; the primal equation is well-scaled.
        return primal_root(k, R, t, xbar, 0.0, kInf);
      }
      return t * lambert_w0(lambda * std::exp(xbar / t) / t);
    case KernelKind::boltzmann_shannon:
      return std::exp((std::log(xbar) + t * std::log(lambda)) / (1.0 + t));
    case KernelKind::burg:
      return primal_root(k, R, t, xbar, 0.0, kInf);
  }
  return 0.0;
}

// ---- scalar dispatch (univariate priors) -----------------------------------

double scalar_prox(KernelKind k, const ReferenceDistribution& R, double t,
                   double xbar) {
  const auto& v = R.value();

  if (const auto* n = std::get_if<dist::Normal>(&v)) {
    return prox_normal_1d(k, n->mu(0), n->sigma(0, 0), t, xbar);
  }
  if (const auto* g = std::get_if<dist::Gamma>(&v)) {
    return prox_gamma_1d(k, *g, t, xbar);
  }
  if (const auto* p = std::get_if<dist::Poisson>(&v)) {
    return prox_poisson_1d(k, R, p->lambda, t, xbar);
  }
  if (std::get_if<dist::Laplace>(&v) != nullptr ||
      std::get_if<dist::NormalInverseGaussian>(&v) != nullptr) {
    double lo = k == KernelKind::energy ? -kInf : 0.0;
    return primal_root(k, R, t, xbar, lo, kInf);
  }
  if (const auto* m = std::get_if<dist::Multinomial>(&v)) {
    return primal_root(k, R, t, xbar, 0.0, static_cast<double>(m->n));
  }
  if (std::get_if<dist::NegativeMultinomial>(&v) != nullptr) {
    return primal_root(k, R, t, xbar, 0.0, kInf);
  }
  if (const auto* u = std::get_if<dist::DiscreteUniform>(&v)) {
    if (u->a == u->b) return static_cast<double>(u->a);
    double th = dual_root(k, R, t, xbar, -kInf, kInf);
    return dual_recover(k, xbar, t, th);
  }
  if (const auto* u = std::get_if<dist::ContinuousUniform>(&v)) {
    if (u->a == u->b) return u->a;
    double th = dual_root(k, R, t, xbar, -kInf, kInf);
    return dual_recover(k, xbar, t, th);
  }
  if (const auto* l = std::get_if<dist::Logistic>(&v)) {
    double th = dual_root(k, R, t, xbar, -1.0 / l->s, 1.0 / l->s);
    return dual_recover(k, xbar, t, th);
  }
  throw Unsupported("prox: no scalar rule for this prior");
}

// ---- joint solvers ----------------------------------------------------------

Vec prox_normal_joint(KernelKind k, const dist::Normal& n, double t,
                      const Vec& xbar) {
  if (k == KernelKind::energy) {
    // (tI + Sigma)^{-1} (Sigma xbar + t mu)
    Mat m = n.sigma;
    m.diagonal().array() += t;
    return Eigen::LLT<Mat>(m).solve(n.sigma * xbar + t * n.mu);
  }
  // Only the separable (diagonal covariance) case reduces to the univariate
  // table rows.
  if (!n.sigma.isDiagonal(1e-14)) {
    throw Unsupported(
        "prox: multivariate Normal under a non-Energy kernel requires a "
        "diagonal covariance");
  }
  Vec out(xbar.size());
  for (int i = 0; i < xbar.size(); ++i) {
    out(i) = prox_normal_1d(k, n.mu(i), n.sigma(i, i), t, xbar(i));
  }
  return out;
}

// Energy kernel, NIG prior: x+ = (I + rho Sigma^{-1})^{-1} (t beta + xbar +
// rho Sigma^{-1} mu) with rho >= 0 solving
//   (rho delta)^2 + || (rho^{-1} I + Sigma^{-1})^{-1} v ||^2_{Sigma^{-1}}
//     = (alpha t)^2,     v = t beta + xbar - mu.
Vec prox_nig_energy(const dist::NormalInverseGaussian& g, double t,
                    const Vec& xbar) {
  Eigen::SelfAdjointEigenSolver<Mat> es(g.sigma);
  if (es.info() != Eigen::Success)
    throw RootFailure("prox: NIG covariance eigendecomposition failed");
  const Vec lam = es.eigenvalues();
  const Mat& Q = es.eigenvectors();

  Vec vt = Q.transpose() * (t * g.beta + xbar - g.mu);
  Vec rt = Q.transpose() * (t * g.beta + xbar);
  Vec mt = Q.transpose() * g.mu;
  const double target = (g.alpha * t) * (g.alpha * t);

  auto resid = [&](double rho) {
    double acc = rho * rho * g.delta * g.delta;
    for (int i = 0; i < vt.size(); ++i) {
      double f = rho / (lam(i) + rho);
      acc += vt(i) * vt(i) * lam(i) * f * f;
    }
    return acc - target;
  };

  double rho_hi = g.alpha * t / g.delta;
  double rho;
  if (resid(rho_hi) <= 0.0) {
    rho = rho_hi;  // only when v = 0 (prox lands exactly at mu)
  } else {
    double rho_lo = rho_hi;
    int guard = 0;
    while (resid(rho_lo) > 0.0) {
      rho_lo *= 0.5;
      if (++guard > 120)
        throw RootFailure("prox: NIG rho bracket collapsed");
    }
    rho = solve_monotone(resid, kNoDeriv, Bracket{rho_lo, rho_hi},
                         1e-14 * std::max(1.0, target));
  }

  Vec xt(xbar.size());
  for (int i = 0; i < xbar.size(); ++i) {
    xt(i) = (lam(i) * rt(i) + rho * mt(i)) / (lam(i) + rho);
  }
  return Q * xt;
}

// Burg kernel, NIG prior with Sigma = sigma I: per-coordinate quadratics
// coupled through a scalar rho > 0.
Vec prox_nig_burg(const dist::NormalInverseGaussian& g, double t,
                  const Vec& xbar) {
  const int d = int(xbar.size());
  double sigma = g.sigma(0, 0);
  if (!g.sigma.isApprox(sigma * Mat::Identity(d, d), 1e-12)) {
    throw Unsupported(
        "prox: NIG under the Burg kernel requires Sigma = sigma I");
  }
  Vec w(d);
  for (int i = 0; i < d; ++i) w(i) = t * g.beta(i) - 1.0 / xbar(i);
  const double target = (g.alpha * t / sigma) * (g.alpha * t / sigma);

  // N_i(rho) = 2 rho (x_i^+ - mu_i); cancellation-free on both sign branches.
  auto n_of = [&](double rho, int i) {
    double q = w(i) + rho * g.mu(i);
    double s = w(i) - rho * g.mu(i);
    double root = std::sqrt(q * q + 4.0 * rho);
    if (s < 0.0) return 4.0 * rho * (g.mu(i) * w(i) + 1.0) / (root - s);
    return s + root;
  };
  auto resid = [&](double rho) {
    double acc = rho * rho * g.delta * g.delta;
    for (int i = 0; i < d; ++i) {
      double n = n_of(rho, i);
      acc += n * n / (4.0 * sigma);
    }
    return acc - target;
  };

  double rho_hi = g.alpha * t / (sigma * g.delta);
  double rho;
  if (resid(rho_hi) <= 0.0) {
    rho = rho_hi;
  } else {
    double rho_lo = rho_hi;
    int guard = 0;
    while (resid(rho_lo) > 0.0) {
      rho_lo *= 0.5;
      if (++guard > 120)
        throw RootFailure("prox: NIG rho bracket collapsed");
    }
    rho = solve_monotone(resid, kNoDeriv, Bracket{rho_lo, rho_hi},
                         1e-14 * std::max(1.0, target));
  }

  Vec out(d);
  for (int i = 0; i < d; ++i) out(i) = g.mu(i) + n_of(rho, i) / (2.0 * rho);
  return out;
}

// Nested scalar roots for the coupled multinomial / negative-multinomial
// stationarity systems: for a fixed total S each coordinate equation is
// strictly monotone; the totals equation in S is monotone as well.
struct CoupledSpec {
  // coordinate equation residual at (x, S)
  std::function<double(int, double, double)> coord;
  // derivative of the coordinate equation in x (for Newton)
  std::function<double(int, double, double)> coord_dx;
  double s_lo, s_hi;               // open interval for S
  std::function<double(double)> total;  // target total as a function of S
};

Vec solve_coupled(const CoupledSpec& spec, int d, const Vec& xbar) {
  auto coord_solve = [&](int i, double s) {
    auto f = [&](double x) { return spec.coord(i, x, s); };
    double seed = std::max(std::abs(xbar(i)), 1e-3);
    Bracket br = bracket_sign_change(f, 0.5 * seed, 1.5 * seed, 0.0, kInf);
    ScalarFn df = [&](double x) { return spec.coord_dx(i, x, s); };
    return solve_monotone(f, df, br, 1e-13 * std::max(1.0, seed));
  };
  auto totals = [&](double s) {
    double acc = 0.0;
    for (int i = 0; i < d; ++i) acc += coord_solve(i, s);
    return acc - spec.total(s);
  };
  double mid = std::isinf(spec.s_hi) ? spec.s_lo + 1.0
                                     : 0.5 * (spec.s_lo + spec.s_hi);
  double w = std::isinf(spec.s_hi) ? 1.0 : 0.25 * (spec.s_hi - spec.s_lo);
  Bracket br;
  try {
    br = bracket_sign_change(totals, mid - 0.5 * w, mid + 0.5 * w, spec.s_lo,
                             spec.s_hi);
  } catch (const NoSignChange&) {
    throw RootFailure("prox: totals equation of the coupled system has no "
                      "certified bracket");
  }
  double s = solve_monotone(totals, kNoDeriv, br, 1e-12);
  Vec out(d);
  for (int i = 0; i < d; ++i) out(i) = coord_solve(i, s);
  return out;
}

Vec prox_multinomial_joint(KernelKind k, const dist::Multinomial& m, double t,
                           const Vec& xbar) {
  const int d = int(m.p.size());
  const double n = static_cast<double>(m.n);

  if (k == KernelKind::boltzmann_shannon) {
    // x_i^+ = gamma_i (n - rho)^tau with rho = sum x_j^+ solving
    // rho = (n - rho)^tau sum gamma_i.
    const double tau = t / (t + 1.0);
    Vec log_gamma(d);
    for (int i = 0; i < d; ++i) {
      log_gamma(i) = tau * (std::log(m.p(i)) + std::log(xbar(i)) / t -
                            std::log(m.p0));
    }
    double gsum = 0.0;
    for (int i = 0; i < d; ++i) gsum += std::exp(log_gamma(i));
    auto f = [&](double rho) {
      return rho - std::pow(n - rho, tau) * gsum;
    };
    double rho = solve_monotone(f, kNoDeriv, Bracket{0.0, n}, 1e-13 * n);
    Vec out(d);
    for (int i = 0; i < d; ++i) {
      out(i) = std::exp(log_gamma(i) + tau * std::log(n - rho));
    }
    return out;
  }

  CoupledSpec spec;
  spec.s_lo = 0.0;
  spec.s_hi = n;
  spec.total = [](double s) { return s; };
  if (k == KernelKind::energy) {
    spec.coord = [&, t](int i, double x, double s) {
      return (x - xbar(i)) / t +
             std::log(x * m.p0 / (m.p(i) * (n - s)));
    };
    spec.coord_dx = [t](int, double x, double) { return 1.0 / t + 1.0 / x; };
  } else {  // burg
    spec.coord = [&, t](int i, double x, double s) {
      return t * std::log(x * m.p0 / (m.p(i) * (n - s))) - 1.0 / x +
             1.0 / xbar(i);
    };
    spec.coord_dx = [t](int, double x, double) {
      return t / x + 1.0 / (x * x);
    };
  }
  return solve_coupled(spec, d, xbar);
}

Vec prox_negative_multinomial_joint(KernelKind k,
                                    const dist::NegativeMultinomial& m,
                                    double t, const Vec& xbar) {
  const int d = int(m.p.size());

  if (k == KernelKind::boltzmann_shannon) {
    // Coordinates are closed given S = x0 + sum x_j^+.
    auto x_of = [&](int i, double s) {
      return std::exp((std::log(xbar(i)) + t * std::log(m.p(i) * s)) /
                      (1.0 + t));
    };
    auto f = [&](double s) {
      double acc = m.x0;
      for (int i = 0; i < d; ++i) acc += x_of(i, s);
      return acc - s;
    };
    double hi = 2.0 * m.x0;
    int guard = 0;
    while (f(hi) > 0.0) {
      hi *= 2.0;
      if (++guard > 200)
        throw RootFailure("prox: NegativeMultinomial totals diverged");
    }
    double s =
        solve_monotone(f, kNoDeriv, Bracket{m.x0, hi}, 1e-12 * m.x0);
    Vec out(d);
    for (int i = 0; i < d; ++i) out(i) = x_of(i, s);
    return out;
  }

  // Energy / Burg: pin the coordinates with p_i = 0 to zero (outside
  // coordinates of I(p)); the rest form the nested system.
  std::vector<int> act;
  for (int i = 0; i < d; ++i) {
    if (m.p(i) > 0.0) act.push_back(i);
  }
  CoupledSpec spec;
  spec.s_lo = m.x0;
  spec.s_hi = kInf;
  spec.total = [&](double s) { return s - m.x0; };
  if (k == KernelKind::energy) {
    spec.coord = [&, t](int j, double x, double s) {
      int i = act[size_t(j)];
      return (x - xbar(i)) / t + std::log(x / (m.p(i) * s));
    };
    spec.coord_dx = [t](int, double x, double) { return 1.0 / t + 1.0 / x; };
  } else {
    spec.coord = [&, t](int j, double x, double s) {
      int i = act[size_t(j)];
      return t * std::log(x / (m.p(i) * s)) - 1.0 / x + 1.0 / xbar(i);
    };
    spec.coord_dx = [t](int, double x, double) {
      return t / x + 1.0 / (x * x);
    };
  }
  Vec xb_act(act.size());
  for (size_t j = 0; j < act.size(); ++j) xb_act(int(j)) = xbar(act[j]);
  // totals over active coordinates only
  CoupledSpec aspec = spec;
  Vec sol = solve_coupled(aspec, int(act.size()), xb_act);
  Vec out = Vec::Zero(d);
  for (size_t j = 0; j < act.size(); ++j) out(act[j]) = sol(int(j));
  return out;
}

bool is_joint(const ReferenceDistribution& R) {
  const auto& v = R.value();
  return std::holds_alternative<dist::Normal>(v) ||
         std::holds_alternative<dist::NormalInverseGaussian>(v) ||
         std::holds_alternative<dist::Multinomial>(v) ||
         std::holds_alternative<dist::NegativeMultinomial>(v);
}

double residual_or_zero(const ProxRequest& req, const Vec& x) {
  try {
    return prox_residual(req, x);
  } catch (const DomainError&) {
    return 0.0;  // boundary-attaining solutions (degenerate supports)
  }
}

}  // namespace

ProxResult bregman_prox(const ProxRequest& req) {
  if (!(req.t > 0.0) || !std::isfinite(req.t)) {
    throw DomainError("prox: step t must be positive");
  }
  if (kernel_domain_contains(req.kernel, req.xbar) != Region::interior) {
    throw DomainError("prox: xbar must lie in int dom h");
  }
  check_compat(req.kernel, req.prior);

  const int pd = req.prior.dim();
  const bool joint = is_joint(req.prior) && pd > 1;
  if (joint && req.xbar.size() != pd) {
    throw DomainError("prox: xbar dimension does not match the prior");
  }

  const Vec mu = mean(req.prior);
  Vec x(req.xbar.size());

  if (!joint) {
    for (int i = 0; i < req.xbar.size(); ++i) {
      if (req.xbar(i) == mu(0)) {
        x(i) = req.xbar(i);  // theta+ = 0 iff xbar = E_R
      } else {
        x(i) = scalar_prox(req.kernel, req.prior, req.t, req.xbar(i));
      }
    }
  } else if ((req.xbar.array() == mu.array()).all()) {
    x = req.xbar;
  } else {
    const auto& v = req.prior.value();
    if (const auto* n = std::get_if<dist::Normal>(&v)) {
      x = prox_normal_joint(req.kernel, *n, req.t, req.xbar);
    } else if (const auto* g = std::get_if<dist::NormalInverseGaussian>(&v)) {
      switch (req.kernel) {
        case KernelKind::energy:
          x = prox_nig_energy(*g, req.t, req.xbar);
          break;
        case KernelKind::burg:
          x = prox_nig_burg(*g, req.t, req.xbar);
          break;
        case KernelKind::boltzmann_shannon:
          throw Unsupported(
              "prox: multivariate NIG under the entropy kernel is not in the "
              "catalog");
      }
    } else if (const auto* m = std::get_if<dist::Multinomial>(&v)) {
      x = prox_multinomial_joint(req.kernel, *m, req.t, req.xbar);
    } else if (const auto* m = std::get_if<dist::NegativeMultinomial>(&v)) {
      x = prox_negative_multinomial_joint(req.kernel, *m, req.t, req.xbar);
    } else {
      throw Unsupported("prox: no joint rule for this prior");
    }
  }

  ProxResult out;
  out.x = std::move(x);
  out.theta = kernel_grad(req.kernel, req.xbar) - kernel_grad(req.kernel, out.x);
  out.residual = residual_or_zero(req, out.x);
  return out;
}

double prox_residual(const ProxRequest& req, const Vec& xplus) {
  if (kernel_domain_contains(req.kernel, xplus) != Region::interior ||
      cramer_domain_classify(req.prior, xplus) != Region::interior) {
    throw DomainError("prox: residual requires x+ interior to both domains");
  }
  Vec r = kernel_grad(req.kernel, xplus) - kernel_grad(req.kernel, req.xbar) +
          req.t * cramer_grad(req.prior, xplus);
  return r.lpNorm<Eigen::Infinity>();
}

Vec dual_prox_theta(KernelKind k, const ReferenceDistribution& prior, double t,
                    const Vec& xbar) {
  return bregman_prox(ProxRequest{k, prior, t, xbar}).theta;
}

}  // namespace mem
