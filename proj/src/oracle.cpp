#include "mem/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <random>

#include "mem/errors.hpp"
#include "mem/rootfind.hpp"

namespace mem {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Interval {
  double lo, hi;
};

// Open interval hull of the natural parameter space (univariate families).
Interval theta_interval(const ReferenceDistribution& d) {
  const auto& v = d.value();
  if (const auto* g = std::get_if<dist::Gamma>(&v)) return {-kInf, g->beta};
  if (const auto* l = std::get_if<dist::Laplace>(&v))
    return {-1.0 / l->b, 1.0 / l->b};
  if (const auto* l = std::get_if<dist::Logistic>(&v))
    return {-1.0 / l->s, 1.0 / l->s};
  if (const auto* m = std::get_if<dist::NegativeMultinomial>(&v))
    return {-kInf, -std::log(m->p(0))};
  if (const auto* g = std::get_if<dist::NormalInverseGaussian>(&v)) {
    double sg = std::sqrt(g->sigma(0, 0));
    return {-g->beta(0) - g->alpha / sg, -g->beta(0) + g->alpha / sg};
  }
  return {-kInf, kInf};
}

// Open interval hull of dom psi* (univariate families).
Interval cramer_interval(const ReferenceDistribution& d) {
  const auto& v = d.value();
  if (std::holds_alternative<dist::Gamma>(v) ||
      std::holds_alternative<dist::Poisson>(v) ||
      std::holds_alternative<dist::NegativeMultinomial>(v)) {
    return {0.0, kInf};
  }
  if (const auto* m = std::get_if<dist::Multinomial>(&v))
    return {0.0, static_cast<double>(m->n)};
  if (const auto* u = std::get_if<dist::DiscreteUniform>(&v))
    return {static_cast<double>(u->a), static_cast<double>(u->b)};
  if (const auto* u = std::get_if<dist::ContinuousUniform>(&v))
    return {u->a, u->b};
  return {-kInf, kInf};
}

double clamp_into(double x, const Interval& iv) {
  if (std::isfinite(iv.lo) && std::isfinite(iv.hi)) {
    double w = iv.hi - iv.lo;
    return std::min(std::max(x, iv.lo + 1e-3 * w), iv.hi - 1e-3 * w);
  }
  if (std::isfinite(iv.lo)) return std::max(x, iv.lo + 1.0e-3);
  if (std::isfinite(iv.hi)) return std::min(x, iv.hi - 1.0e-3);
  return x;
}

}  // namespace

OracleReport make_report(std::string quantity, double analytic, double oracle,
                         double tol) {
  OracleReport r;
  r.quantity = std::move(quantity);
  r.analytic = analytic;
  r.oracle = oracle;
  r.abs_err = std::abs(analytic - oracle);
  r.rel_err = r.abs_err / std::max(1.0, std::abs(analytic));
  r.pass = r.rel_err <= tol;
  return r;
}

void write_reports_csv(std::ostream& out,
                       const std::vector<OracleReport>& reports) {
  out << "quantity,analytic,oracle,abs_err,rel_err,pass\n";
  out.precision(17);
  for (const auto& r : reports) {
    out << r.quantity << ',' << r.analytic << ',' << r.oracle << ','
        << r.abs_err << ',' << r.rel_err << ',' << (r.pass ? 1 : 0) << '\n';
  }
}

double numeric_conjugate(const ReferenceDistribution& d, double y,
                         double tol) {
  if (!d.univariate()) {
    throw DomainError("oracle: numeric_conjugate requires a univariate prior");
  }
  Interval th = theta_interval(d);
  auto slope = [&](double t) { return log_normalizer_grad1(d, t) - y; };

  // theta = 0 is interior for the whole catalog; seed the bracket well
  // inside the walls
  double room_lo = std::isfinite(th.lo) ? -th.lo : 1.0;
  double room_hi = std::isfinite(th.hi) ? th.hi : 1.0;
  double seed = 0.125 * std::min({1.0, room_lo, room_hi});
  Bracket br;
  try {
    br = bracket_sign_change(slope, -seed, seed, th.lo, th.hi);
  } catch (const NoSignChange&) {
    throw BracketFailure(
        "oracle: conjugate supremum not bracketed; y on or outside the "
        "effective domain boundary");
  }

  // golden-section maximization of the concave objective
  auto phi = [&](double t) { return y * t - log_normalizer(d, t); };
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = br.lo, b = br.hi;
  double c = b - gr * (b - a);
  double e = a + gr * (b - a);
  double fc = phi(c), fe = phi(e);
  for (int it = 0; it < 300; ++it) {
    if (b - a <= std::max(tol, 1e-12) * std::max(1.0, std::abs(a) + std::abs(b)))
      break;
    if (fc >= fe) {
      b = e;
      e = c;
      fe = fc;
      c = b - gr * (b - a);
      fc = phi(c);
    } else {
      a = c;
      c = e;
      fc = fe;
      e = a + gr * (b - a);
      fe = phi(e);
    }
  }
  return std::max(fc, fe);
}

Vec fd_gradient(const std::function<double(const Vec&)>& f, const Vec& x,
                double step) {
  if (!std::isfinite(f(x))) {
    throw DomainError("oracle: fd_gradient requires f finite at x");
  }
  Vec out(x.size());
  Vec p = x;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    double h = step * std::max(1.0, std::abs(x(i)));
    p(i) = x(i) + h;
    double fp = f(p);
    p(i) = x(i) - h;
    double fm = f(p);
    p(i) = x(i);
    if (std::isfinite(fp) && std::isfinite(fm)) {
      out(i) = (fp - fm) / (2.0 * h);
    } else if (std::isfinite(fp)) {
      out(i) = (fp - f(x)) / h;  // one-sided near a domain wall
    } else if (std::isfinite(fm)) {
      out(i) = (f(x) - fm) / h;
    } else {
      throw DomainError("oracle: fd_gradient stepped outside the domain on "
                        "both sides");
    }
  }
  return out;
}

double dense_prox_1d(KernelKind k, const ReferenceDistribution& prior,
                     double t, double xbar) {
  if (!prior.univariate()) {
    throw DomainError("oracle: dense_prox_1d requires a univariate prior");
  }
  Interval dom = cramer_interval(prior);
  if (k != KernelKind::energy) {
    dom.lo = std::max(dom.lo, 0.0);
  }
  if (!(dom.lo < dom.hi)) {
    throw DomainError("oracle: empty feasible interval");
  }

  Vec xb(1);
  xb << xbar;
  auto phi = [&](double u) {
    if (u <= dom.lo || u >= dom.hi) return kInf;
    double conj;
    try {
      conj = numeric_conjugate(prior, u, 1e-12);
    } catch (const BracketFailure&) {
      return kInf;
    }
    Vec uv(1);
    uv << u;
    return t * conj + bregman_distance(k, uv, xb);
  };

  // downhill triple around the clamped start
  double b = clamp_into(xbar, dom);
  double step = std::isfinite(dom.lo) && std::isfinite(dom.hi)
                    ? 0.05 * (dom.hi - dom.lo)
                    : std::max(0.1, 0.1 * std::abs(b));
  auto toward = [&](double from, double wall, double gap) {
    return std::isinf(wall) ? from + gap : 0.5 * (from + wall);
  };
  double a = std::isfinite(dom.lo) ? 0.5 * (b + dom.lo) : b - step;
  double c = std::isfinite(dom.hi) ? 0.5 * (b + dom.hi) : b + step;
  double fa = phi(a), fb = phi(b), fc = phi(c);
  for (int guard = 0; guard < 400; ++guard) {
    if (fb <= fa && fb <= fc) break;
    if (fa < fb) {
      c = b;
      fc = fb;
      b = a;
      fb = fa;
      a = toward(a, dom.lo, -(c - b) * 2.0);
      fa = phi(a);
    } else {
      a = b;
      fa = fb;
      b = c;
      fb = fc;
      c = toward(c, dom.hi, (b - a) * 2.0);
      fc = phi(c);
    }
  }

  // golden section down to a modest width, then bisection on the sign of a
  // finite-difference derivative for the last digits
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double u = c - gr * (c - a);
  double w = a + gr * (c - a);
  double fu = phi(u), fw = phi(w);
  while (c - a > 1e-5 * std::max(1.0, std::abs(b))) {
    if (fu <= fw) {
      c = w;
      w = u;
      fw = fu;
      u = c - gr * (c - a);
      fu = phi(u);
    } else {
      a = u;
      u = w;
      fu = fw;
      w = a + gr * (c - a);
      fw = phi(w);
    }
  }
  double lo = a, hi = c;
  for (int it = 0; it < 80 && hi - lo > 1e-10 * std::max(1.0, std::abs(lo));
       ++it) {
    double mid = 0.5 * (lo + hi);
    double h = 1e-6 * std::max(1.0, std::abs(mid));
    double dsign = phi(mid + h) - phi(mid - h);
    if (dsign > 0.0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

OracleReport descent_lemma_check(const FidelityFamily& f, KernelKind k,
                                 double L, int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const bool positive = k != KernelKind::energy;
  std::uniform_real_distribution<double> unif(positive ? 0.1 : -2.0,
                                              positive ? 4.0 : 2.0);
  const Eigen::Index d = f.op.cols();
  double worst = -kInf;
  for (int s = 0; s < samples; ++s) {
    Vec x(d), y(d);
    for (Eigen::Index i = 0; i < d; ++i) x(i) = unif(rng);
    for (Eigen::Index i = 0; i < d; ++i) y(i) = unif(rng);
    double lhs = fidelity_value(f, y);
    double rhs = fidelity_value(f, x) + fidelity_grad(f, x).dot(y - x) +
                 L * bregman_distance(k, y, x);
    worst = std::max(worst, lhs - rhs);
  }
  OracleReport r;
  r.quantity = std::string("descent_lemma/") + fidelity_name(f.kind);
  r.analytic = 0.0;
  r.oracle = worst;
  r.abs_err = std::max(0.0, worst);
  r.rel_err = r.abs_err;
  r.pass = worst <= 1e-9;
  return r;
}

}  // namespace mem
