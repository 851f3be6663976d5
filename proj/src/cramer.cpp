#include "mem/cramer.hpp"

#include <cmath>
#include <limits>

#include "mem/errors.hpp"
#include "mem/rootfind.hpp"
#include "numerics.hpp"

namespace mem {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Root of psi_P'(theta) = y for the implicit univariate families. The
// stationarity map is strictly increasing, so a doubling (or wall-approach)
// search always certifies a bracket for interior y.
double conjugate_root(const ReferenceDistribution& d, double y,
                      double wall_lo, double wall_hi) {
  auto f = [&](double t) { return log_normalizer_grad1(d, t) - y; };
  auto df_missing = std::optional<ScalarFn>{};
  double seed = 0.125 * std::min(1.0, std::isinf(wall_hi) ? 1.0 : wall_hi -
                                                                      wall_lo);
  Bracket br = bracket_sign_change(f, -seed, seed, wall_lo, wall_hi);
  return solve_monotone(f, df_missing, br, 1e-13 * std::max(1.0, std::abs(y)));
}

struct ScalarCramer {
  double value;
  double grad;  // NaN when not interior
};

// ---- scalar values for the univariate catalog -----------------------------

double value_gamma(const dist::Gamma& g, double y) {
  if (y <= 0.0) return kInf;
  return g.beta * y - g.alpha + g.alpha * std::log(g.alpha / (g.beta * y));
}

double value_laplace(const dist::Laplace& l, double y) {
  double rho = (y - l.mu) / l.b;
  double s = detail::sqrt1p_sq_m1(rho);  // sqrt(1 + rho^2) - 1
  return s + std::log(2.0) - std::log(2.0 + s);
}

double value_poisson(const dist::Poisson& p, double y) {
  if (y < 0.0) return kInf;
  if (y == 0.0) return p.lambda;
  return y * std::log(y / p.lambda) - y + p.lambda;
}

double grad_laplace(const dist::Laplace& l, double y) {
  double rho = (y - l.mu) / l.b;
  return rho / (l.b * (std::hypot(1.0, rho) + 1.0));
}

}  // namespace

CramerStrategy cramer_strategy(const ReferenceDistribution& d) {
  const auto& v = d.value();
  if (std::holds_alternative<dist::DiscreteUniform>(v) ||
      std::holds_alternative<dist::ContinuousUniform>(v) ||
      std::holds_alternative<dist::Logistic>(v)) {
    return CramerStrategy::implicit_scalar_root;
  }
  return CramerStrategy::closed_form;
}

// ---- classification --------------------------------------------------------

Region cramer_domain_classify1(const ReferenceDistribution& d, double y) {
  Vec v(1);
  v << y;
  return cramer_domain_classify(d, v);
}

Region cramer_domain_classify(const ReferenceDistribution& d, const Vec& y) {
  if (!y.allFinite()) return Region::outside;
  const auto& v = d.value();

  if (std::holds_alternative<dist::Normal>(v) ||
      std::holds_alternative<dist::NormalInverseGaussian>(v) ||
      std::holds_alternative<dist::Laplace>(v) ||
      std::holds_alternative<dist::Logistic>(v)) {
    return Region::interior;  // dom = R^d
  }
  if (const auto* m = std::get_if<dist::Multinomial>(&v)) {
    if (y.size() != m->p.size())
      throw DomainError("cramer: Multinomial y dimension mismatch");
    double n = static_cast<double>(m->n);
    double s = y.sum();
    if ((y.array() < 0.0).any() || s > n) return Region::outside;
    if ((y.array() == 0.0).any() || s == n) return Region::boundary;
    return Region::interior;
  }
  if (const auto* m = std::get_if<dist::NegativeMultinomial>(&v)) {
    if (y.size() != m->p.size())
      throw DomainError("cramer: NegativeMultinomial y dimension mismatch");
    bool on_face = false;
    for (int i = 0; i < y.size(); ++i) {
      if (y(i) < 0.0) return Region::outside;
      if (m->p(i) == 0.0 && y(i) != 0.0) return Region::outside;
      if (y(i) == 0.0 || m->p(i) == 0.0) on_face = true;
    }
    return on_face ? Region::boundary : Region::interior;
  }

  // univariate families, lifted componentwise
  bool any_boundary = false;
  for (int i = 0; i < y.size(); ++i) {
    double yi = y(i);
    Region r = Region::interior;
    if (const auto* g = std::get_if<dist::Gamma>(&v)) {
      r = yi > 0.0 ? Region::interior : Region::outside;
      (void)g;
    } else if (std::holds_alternative<dist::Poisson>(v)) {
      r = yi > 0.0 ? Region::interior
                   : (yi == 0.0 ? Region::boundary : Region::outside);
    } else if (const auto* u = std::get_if<dist::DiscreteUniform>(&v)) {
      double a = static_cast<double>(u->a), b = static_cast<double>(u->b);
      if (yi < a || yi > b)
        r = Region::outside;
      else if (yi == a || yi == b)
        r = Region::boundary;
      else
        r = Region::interior;
    } else if (const auto* u = std::get_if<dist::ContinuousUniform>(&v)) {
      r = (yi > u->a && yi < u->b) ? Region::interior : Region::outside;
      if (u->a == u->b && yi == u->a) r = Region::boundary;  // point mass
    } else {
      throw DomainError("cramer: unclassified distribution");
    }
    if (r == Region::outside) return Region::outside;
    if (r == Region::boundary) any_boundary = true;
  }
  return any_boundary ? Region::boundary : Region::interior;
}

// ---- value ------------------------------------------------------------------

double cramer_value1(const ReferenceDistribution& d, double y) {
  Vec v(1);
  v << y;
  return cramer_value(d, v);
}

double cramer_value(const ReferenceDistribution& d, const Vec& y) {
  if (!y.allFinite()) return kInf;
  const auto& v = d.value();

  if (const auto* n = std::get_if<dist::Normal>(&v)) {
    if (n->mu.size() == y.size()) {
      Vec r = y - n->mu;
      return 0.5 * r.dot(n->llt.solve(r));
    }
  }
  if (const auto* g = std::get_if<dist::NormalInverseGaussian>(&v)) {
    if (y.size() != g->mu.size())
      throw DomainError("cramer: NIG y dimension mismatch");
    Vec r = y - g->mu;
    double q = r.dot(g->llt.solve(r));
    return g->alpha * std::sqrt(g->delta * g->delta + q) - g->beta.dot(r) -
           g->delta * g->gamma;
  }
  if (const auto* m = std::get_if<dist::Multinomial>(&v)) {
    if (cramer_domain_classify(d, y) == Region::outside) return kInf;
    double n = static_cast<double>(m->n);
    double rest = n - y.sum();
    double acc = detail::xlogy(rest, rest / (n * m->p0));
    for (int i = 0; i < y.size(); ++i) {
      acc += detail::xlogy(y(i), y(i) / (n * m->p(i)));
    }
    return acc;
  }
  if (const auto* m = std::get_if<dist::NegativeMultinomial>(&v)) {
    if (cramer_domain_classify(d, y) == Region::outside) return kInf;
    double ybar = m->x0 + y.sum();
    double acc = m->x0 * std::log(m->x0 / (m->p0 * ybar));
    for (int i = 0; i < y.size(); ++i) {
      if (m->p(i) > 0.0) acc += detail::xlogy(y(i), y(i) / (m->p(i) * ybar));
    }
    return acc;
  }

  if (d.dim() != 1) throw DomainError("cramer: y dimension mismatch");
  double acc = 0.0;
  for (int i = 0; i < y.size(); ++i) {
    double yi = y(i);
    double term;
    if (const auto* g = std::get_if<dist::Gamma>(&v)) {
      term = value_gamma(*g, yi);
    } else if (const auto* l = std::get_if<dist::Laplace>(&v)) {
      term = value_laplace(*l, yi);
    } else if (const auto* p = std::get_if<dist::Poisson>(&v)) {
      term = value_poisson(*p, yi);
    } else if (const auto* u = std::get_if<dist::DiscreteUniform>(&v)) {
      if (u->a == u->b) {
        term = yi == static_cast<double>(u->a) ? 0.0 : kInf;
      } else {
        double a = static_cast<double>(u->a), b = static_cast<double>(u->b);
        double mu = 0.5 * (a + b);
        if (yi < a || yi > b) {
          term = kInf;
        } else if (yi == mu) {
          term = 0.0;
        } else if (yi == a || yi == b) {
          term = std::log(b - a + 1.0);  // point mass against n atoms
        } else {
          double th = conjugate_root(d, yi, -kInf, kInf);
          term = yi * th - log_normalizer(d, th);
        }
      }
    } else if (const auto* u = std::get_if<dist::ContinuousUniform>(&v)) {
      if (u->a == u->b) {
        term = yi == u->a ? 0.0 : kInf;
      } else if (yi <= u->a || yi >= u->b) {
        term = kInf;
      } else if (yi == 0.5 * (u->a + u->b)) {
        term = 0.0;
      } else {
        double th = conjugate_root(d, yi, -kInf, kInf);
        term = yi * th - log_normalizer(d, th);
      }
    } else if (const auto* l = std::get_if<dist::Logistic>(&v)) {
      if (yi == l->mu) {
        term = 0.0;
      } else {
        double th = conjugate_root(d, yi, -1.0 / l->s, 1.0 / l->s);
        term = yi * th - log_normalizer(d, th);
      }
    } else {
      throw DomainError("cramer: unsupported distribution");
    }
    if (std::isinf(term)) return kInf;
    acc += term;
  }
  return acc;
}

// ---- gradient ---------------------------------------------------------------

double cramer_grad1(const ReferenceDistribution& d, double y) {
  Vec v(1);
  v << y;
  return cramer_grad(d, v)(0);
}

Vec cramer_grad(const ReferenceDistribution& d, const Vec& y) {
  if (cramer_domain_classify(d, y) != Region::interior) {
    throw DomainError("cramer: gradient requires y interior to dom psi*");
  }
  const auto& v = d.value();

  if (const auto* n = std::get_if<dist::Normal>(&v)) {
    if (n->mu.size() == y.size()) return n->llt.solve(y - n->mu);
  }
  if (const auto* g = std::get_if<dist::NormalInverseGaussian>(&v)) {
    Vec r = y - g->mu;
    Vec sr = g->llt.solve(r);
    double q = r.dot(sr);
    return -g->beta +
           (g->alpha / std::sqrt(g->delta * g->delta + q)) * sr;
  }
  if (const auto* m = std::get_if<dist::Multinomial>(&v)) {
    double n = static_cast<double>(m->n);
    double rest = n - y.sum();
    Vec out(y.size());
    for (int i = 0; i < y.size(); ++i) {
      out(i) = std::log(y(i) * m->p0 / (m->p(i) * rest));
    }
    return out;
  }
  if (const auto* m = std::get_if<dist::NegativeMultinomial>(&v)) {
    double ybar = m->x0 + y.sum();
    Vec out(y.size());
    for (int i = 0; i < y.size(); ++i) {
      out(i) = std::log(y(i) / (m->p(i) * ybar));
    }
    return out;
  }

  Vec out(y.size());
  for (int i = 0; i < y.size(); ++i) {
    double yi = y(i);
    if (const auto* g = std::get_if<dist::Gamma>(&v)) {
      out(i) = g->beta - g->alpha / yi;
    } else if (const auto* l = std::get_if<dist::Laplace>(&v)) {
      out(i) = grad_laplace(*l, yi);
    } else if (const auto* p = std::get_if<dist::Poisson>(&v)) {
      out(i) = std::log(yi / p->lambda);
    } else if (std::holds_alternative<dist::DiscreteUniform>(v) ||
               std::holds_alternative<dist::ContinuousUniform>(v)) {
      double mu = mean1(d);
      out(i) = yi == mu ? 0.0 : conjugate_root(d, yi, -kInf, kInf);
    } else if (const auto* l = std::get_if<dist::Logistic>(&v)) {
      out(i) = yi == l->mu
                   ? 0.0
                   : conjugate_root(d, yi, -1.0 / l->s, 1.0 / l->s);
    } else {
      throw DomainError("cramer: unsupported distribution");
    }
  }
  return out;
}

}  // namespace mem
