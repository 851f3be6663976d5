#include "mem/expfam.hpp"

#include <cmath>
#include <limits>

#include "mem/errors.hpp"
#include "numerics.hpp"

namespace mem {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require(bool cond, const char* msg) {
  if (!cond) throw DomainError(msg);
}

void require_finite(const Vec& v, const char* msg) {
  if (!v.allFinite()) throw DomainError(msg);
}

Eigen::LLT<Mat> spd_factor(const Mat& sigma, const char* msg) {
  if (sigma.rows() != sigma.cols() || sigma.rows() == 0)
    throw DomainError(msg);
  if (!sigma.isApprox(sigma.transpose(), 1e-12)) throw DomainError(msg);
  Eigen::LLT<Mat> llt(sigma);
  if (llt.info() != Eigen::Success) throw DomainError(msg);
  return llt;
}

// ---- scalar log-normalizers for the univariate catalog -------------------

double psi_gamma(const dist::Gamma& d, double t) {
  if (t >= d.beta) return kInf;
  return -d.alpha * std::log1p(-t / d.beta);
}

double psi_laplace(const dist::Laplace& d, double t) {
  double bt = d.b * t;
  if (std::abs(bt) >= 1.0) return kInf;
  return d.mu * t - std::log1p(-bt * bt);
}

double psi_poisson(const dist::Poisson& d, double t) {
  return d.lambda * std::expm1(t);
}

double psi_discrete_uniform(const dist::DiscreteUniform& d, double t) {
  if (d.a == d.b) return static_cast<double>(d.a) * t;
  double n = static_cast<double>(d.b - d.a + 1);
  return static_cast<double>(d.a) * t + detail::log_geometric_sum(n, t) -
         std::log(n);
}

double psi_continuous_uniform(const dist::ContinuousUniform& d, double t) {
  if (d.a == d.b) return d.a * t;
  return d.a * t + detail::log_expm1_over((d.b - d.a) * t);
}

double psi_logistic(const dist::Logistic& d, double t) {
  if (std::abs(d.s * t) >= 1.0) return kInf;
  return d.mu * t + detail::log_v_over_sin(detail::kPi * d.s * t);
}

double dpsi_gamma(const dist::Gamma& d, double t) {
  return d.alpha / (d.beta - t);
}

double dpsi_laplace(const dist::Laplace& d, double t) {
  double b2 = d.b * d.b;
  return d.mu + 2.0 * b2 * t / (1.0 - b2 * t * t);
}

double dpsi_poisson(const dist::Poisson& d, double t) {
  return d.lambda * std::exp(t);
}

double dpsi_discrete_uniform(const dist::DiscreteUniform& d, double t) {
  double a = static_cast<double>(d.a);
  if (d.a == d.b) return a;
  double n = static_cast<double>(d.b - d.a + 1);
  if (std::abs(n * t) < 1e-6) {
    return 0.5 * (static_cast<double>(d.a) + static_cast<double>(d.b)) +
           (n * n - 1.0) / 12.0 * t;
  }
  return a + n * detail::exp_ratio(n * t) - detail::exp_ratio(t);
}

double dpsi_continuous_uniform(const dist::ContinuousUniform& d, double t) {
  if (d.a == d.b) return d.a;
  double w = d.b - d.a;
  return d.a + w * detail::exp_ratio_centered(w * t);
}

double dpsi_logistic(const dist::Logistic& d, double t) {
  return d.mu + detail::logistic_psi_deriv(d.s, t);
}

// Classification of scalar theta for the univariate families.
Region theta_region_1d(const ReferenceDistribution::Variant& v, double t) {
  if (const auto* g = std::get_if<dist::Gamma>(&v)) {
    if (t < g->beta) return Region::interior;
    return t == g->beta ? Region::boundary : Region::outside;
  }
  if (const auto* l = std::get_if<dist::Laplace>(&v)) {
    double m = std::abs(l->b * t);
    if (m < 1.0) return Region::interior;
    return m == 1.0 ? Region::boundary : Region::outside;
  }
  if (const auto* l = std::get_if<dist::Logistic>(&v)) {
    double m = std::abs(l->s * t);
    if (m < 1.0) return Region::interior;
    return m == 1.0 ? Region::boundary : Region::outside;
  }
  // Normal (d = 1), Poisson, uniforms: whole line.
  return Region::interior;
}

double psi_1d(const ReferenceDistribution::Variant& v, double t) {
  if (const auto* d = std::get_if<dist::Normal>(&v))
    return d->mu(0) * t + 0.5 * d->sigma(0, 0) * t * t;
  if (const auto* d = std::get_if<dist::Gamma>(&v)) return psi_gamma(*d, t);
  if (const auto* d = std::get_if<dist::Laplace>(&v)) return psi_laplace(*d, t);
  if (const auto* d = std::get_if<dist::Poisson>(&v)) return psi_poisson(*d, t);
  if (const auto* d = std::get_if<dist::DiscreteUniform>(&v))
    return psi_discrete_uniform(*d, t);
  if (const auto* d = std::get_if<dist::ContinuousUniform>(&v))
    return psi_continuous_uniform(*d, t);
  if (const auto* d = std::get_if<dist::Logistic>(&v))
    return psi_logistic(*d, t);
  throw DomainError("expfam: distribution is not componentwise-liftable");
}

double dpsi_1d(const ReferenceDistribution::Variant& v, double t) {
  if (const auto* d = std::get_if<dist::Normal>(&v))
    return d->mu(0) + d->sigma(0, 0) * t;
  if (const auto* d = std::get_if<dist::Gamma>(&v)) return dpsi_gamma(*d, t);
  if (const auto* d = std::get_if<dist::Laplace>(&v))
    return dpsi_laplace(*d, t);
  if (const auto* d = std::get_if<dist::Poisson>(&v))
    return dpsi_poisson(*d, t);
  if (const auto* d = std::get_if<dist::DiscreteUniform>(&v))
    return dpsi_discrete_uniform(*d, t);
  if (const auto* d = std::get_if<dist::ContinuousUniform>(&v))
    return dpsi_continuous_uniform(*d, t);
  if (const auto* d = std::get_if<dist::Logistic>(&v))
    return dpsi_logistic(*d, t);
  throw DomainError("expfam: distribution is not componentwise-liftable");
}

// log(sum_i p_i e^{theta_i}) with an optional extra constant term p_extra,
// computed through a max shift.
double log_sum_p_exp(const Vec& p, const Vec& theta, double p_extra) {
  double m = p_extra > 0.0 ? std::log(p_extra) : -kInf;
  for (int i = 0; i < p.size(); ++i) {
    if (p(i) > 0.0) m = std::max(m, std::log(p(i)) + theta(i));
  }
  double s = 0.0;
  if (p_extra > 0.0) s += std::exp(std::log(p_extra) - m);
  for (int i = 0; i < p.size(); ++i) {
    if (p(i) > 0.0) s += std::exp(std::log(p(i)) + theta(i) - m);
  }
  return m + std::log(s);
}

}  // namespace

// ---- constructors ---------------------------------------------------------

ReferenceDistribution ReferenceDistribution::normal(Vec mu, Mat sigma) {
  require_finite(mu, "expfam: Normal requires finite mu");
  require(mu.size() == sigma.rows(),
          "expfam: Normal mu/Sigma dimension mismatch");
  auto llt = spd_factor(sigma, "expfam: Normal requires symmetric Sigma > 0");
  return ReferenceDistribution(
      dist::Normal{std::move(mu), std::move(sigma), std::move(llt)});
}

ReferenceDistribution ReferenceDistribution::normal(double mu,
                                                    double variance) {
  Vec m(1);
  m << mu;
  Mat s(1, 1);
  s << variance;
  return normal(std::move(m), std::move(s));
}

ReferenceDistribution ReferenceDistribution::normal_inverse_gaussian(
    Vec mu, Vec beta, double alpha, double delta, Mat sigma) {
  require_finite(mu, "expfam: NIG requires finite mu");
  require_finite(beta, "expfam: NIG requires finite beta");
  require(mu.size() == beta.size() && mu.size() == sigma.rows(),
          "expfam: NIG parameter dimension mismatch");
  require(delta > 0.0, "expfam: NIG requires delta > 0");
  auto llt = spd_factor(sigma, "expfam: NIG requires symmetric Sigma > 0");
  double q = beta.dot(sigma * beta);
  require(alpha > 0.0 && alpha * alpha >= q,
          "expfam: NIG requires alpha >= sqrt(beta' Sigma beta)");
  double gamma = std::sqrt(std::max(0.0, alpha * alpha - q));
  return ReferenceDistribution(dist::NormalInverseGaussian{
      std::move(mu), std::move(beta), alpha, delta, std::move(sigma),
      std::move(llt), gamma});
}

ReferenceDistribution ReferenceDistribution::gamma(double alpha, double beta) {
  require(alpha > 0.0 && std::isfinite(alpha),
          "expfam: Gamma requires alpha > 0");
  require(beta > 0.0 && std::isfinite(beta), "expfam: Gamma requires beta > 0");
  return ReferenceDistribution(dist::Gamma{alpha, beta});
}

ReferenceDistribution ReferenceDistribution::laplace(double mu, double b) {
  require(std::isfinite(mu), "expfam: Laplace requires finite mu");
  require(b > 0.0 && std::isfinite(b), "expfam: Laplace requires b > 0");
  return ReferenceDistribution(dist::Laplace{mu, b});
}

ReferenceDistribution ReferenceDistribution::poisson(double lambda) {
  require(lambda > 0.0 && std::isfinite(lambda),
          "expfam: Poisson requires lambda > 0");
  return ReferenceDistribution(dist::Poisson{lambda});
}

ReferenceDistribution ReferenceDistribution::multinomial(long n, Vec p) {
  require(n >= 1, "expfam: Multinomial requires integer n >= 1");
  require(p.size() >= 1, "expfam: Multinomial requires d >= 1");
  require_finite(p, "expfam: Multinomial requires finite p");
  require((p.array() > 0.0).all(),
          "expfam: Multinomial (minimal form) requires p_i > 0");
  double s = p.sum();
  require(s < 1.0, "expfam: Multinomial requires sum(p) < 1");
  return ReferenceDistribution(dist::Multinomial{n, std::move(p), 1.0 - s});
}

ReferenceDistribution ReferenceDistribution::bernoulli(double p) {
  require(p > 0.0 && p < 1.0, "expfam: Bernoulli requires p in (0,1)");
  Vec pv(1);
  pv << p;
  return multinomial(1, std::move(pv));
}

ReferenceDistribution ReferenceDistribution::negative_multinomial(Vec p,
                                                                  double x0) {
  require(p.size() >= 1, "expfam: NegativeMultinomial requires d >= 1");
  require_finite(p, "expfam: NegativeMultinomial requires finite p");
  require((p.array() >= 0.0).all() && (p.array() < 1.0).all(),
          "expfam: NegativeMultinomial requires p in [0,1)^d");
  double s = p.sum();
  require(s < 1.0, "expfam: NegativeMultinomial requires sum(p) < 1");
  require(x0 > 0.0 && std::isfinite(x0),
          "expfam: NegativeMultinomial requires x0 > 0");
  return ReferenceDistribution(
      dist::NegativeMultinomial{std::move(p), x0, 1.0 - s});
}

ReferenceDistribution ReferenceDistribution::discrete_uniform(long a, long b) {
  require(a <= b, "expfam: DiscreteUniform requires a <= b");
  return ReferenceDistribution(dist::DiscreteUniform{a, b});
}

ReferenceDistribution ReferenceDistribution::continuous_uniform(double a,
                                                                double b) {
  require(std::isfinite(a) && std::isfinite(b) && a <= b,
          "expfam: ContinuousUniform requires finite a <= b");
  return ReferenceDistribution(dist::ContinuousUniform{a, b});
}

ReferenceDistribution ReferenceDistribution::logistic(double mu, double s) {
  require(std::isfinite(mu), "expfam: Logistic requires finite mu");
  require(s > 0.0 && std::isfinite(s), "expfam: Logistic requires s > 0");
  return ReferenceDistribution(dist::Logistic{mu, s});
}

int ReferenceDistribution::dim() const {
  if (const auto* d = get_if<dist::Normal>()) return int(d->mu.size());
  if (const auto* d = get_if<dist::NormalInverseGaussian>())
    return int(d->mu.size());
  if (const auto* d = get_if<dist::Multinomial>()) return int(d->p.size());
  if (const auto* d = get_if<dist::NegativeMultinomial>())
    return int(d->p.size());
  return 1;
}

std::string ReferenceDistribution::name() const {
  struct Namer {
    std::string operator()(const dist::Normal&) const { return "normal"; }
    std::string operator()(const dist::NormalInverseGaussian&) const {
      return "normal_inverse_gaussian";
    }
    std::string operator()(const dist::Gamma&) const { return "gamma"; }
    std::string operator()(const dist::Laplace&) const { return "laplace"; }
    std::string operator()(const dist::Poisson&) const { return "poisson"; }
    std::string operator()(const dist::Multinomial& m) const {
      return m.n == 1 && m.p.size() == 1 ? "bernoulli" : "multinomial";
    }
    std::string operator()(const dist::NegativeMultinomial&) const {
      return "negative_multinomial";
    }
    std::string operator()(const dist::DiscreteUniform&) const {
      return "discrete_uniform";
    }
    std::string operator()(const dist::ContinuousUniform&) const {
      return "continuous_uniform";
    }
    std::string operator()(const dist::Logistic&) const { return "logistic"; }
  };
  return std::visit(Namer{}, v_);
}

// ---- log_normalizer --------------------------------------------------------

double log_normalizer(const ReferenceDistribution& d, const Vec& theta) {
  if (!theta.allFinite()) throw DomainError("expfam: theta must be finite");
  const auto& v = d.value();

  if (const auto* n = std::get_if<dist::Normal>(&v)) {
    if (n->mu.size() == theta.size()) {
      return n->mu.dot(theta) + 0.5 * theta.dot(n->sigma * theta);
    }
    // componentwise lift is only meaningful for d = 1
  }
  if (const auto* g = std::get_if<dist::NormalInverseGaussian>(&v)) {
    if (theta.size() != g->mu.size())
      throw DomainError("expfam: NIG theta dimension mismatch");
    Vec bt = g->beta + theta;
    double q = bt.dot(g->sigma * bt);
    double r = g->alpha * g->alpha - q;
    if (r < 0.0) return kInf;
    return g->mu.dot(theta) + g->delta * (g->gamma - std::sqrt(r));
  }
  if (const auto* m = std::get_if<dist::Multinomial>(&v)) {
    if (theta.size() != m->p.size())
      throw DomainError("expfam: Multinomial theta dimension mismatch");
    return static_cast<double>(m->n) * log_sum_p_exp(m->p, theta, m->p0);
  }
  if (const auto* m = std::get_if<dist::NegativeMultinomial>(&v)) {
    if (theta.size() != m->p.size())
      throw DomainError(
          "expfam: NegativeMultinomial theta dimension mismatch");
    double ls = log_sum_p_exp(m->p, theta, 0.0);
    if (ls >= 0.0) return kInf;  // sum p_i e^theta_i >= 1
    return m->x0 * (std::log(m->p0) - std::log1p(-std::exp(ls)));
  }

  if (d.dim() != 1)
    throw DomainError("expfam: theta dimension mismatch");
  double acc = 0.0;
  for (int i = 0; i < theta.size(); ++i) {
    double t = psi_1d(v, theta(i));
    if (std::isinf(t)) return kInf;
    acc += t;
  }
  return acc;
}

double log_normalizer(const ReferenceDistribution& d, double theta) {
  Vec t(1);
  t << theta;
  return log_normalizer(d, t);
}

// ---- gradient --------------------------------------------------------------

Vec log_normalizer_grad(const ReferenceDistribution& d, const Vec& theta) {
  if (natural_domain_contains(d, theta) != Region::interior) {
    throw DomainError(
        "expfam: log_normalizer_grad requires theta in int Theta_P");
  }
  const auto& v = d.value();

  if (const auto* n = std::get_if<dist::Normal>(&v)) {
    if (n->mu.size() == theta.size()) return n->mu + n->sigma * theta;
  }
  if (const auto* g = std::get_if<dist::NormalInverseGaussian>(&v)) {
    Vec bt = g->beta + theta;
    Vec sb = g->sigma * bt;
    double r = g->alpha * g->alpha - bt.dot(sb);
    return g->mu + (g->delta / std::sqrt(r)) * sb;
  }
  if (const auto* m = std::get_if<dist::Multinomial>(&v)) {
    // n p_i e^{theta_i} / (p0 + sum_j p_j e^{theta_j}) via a max shift
    double lse = log_sum_p_exp(m->p, theta, m->p0);
    Vec out(theta.size());
    for (int i = 0; i < theta.size(); ++i) {
      out(i) = static_cast<double>(m->n) *
               std::exp(std::log(m->p(i)) + theta(i) - lse);
    }
    return out;
  }
  if (const auto* m = std::get_if<dist::NegativeMultinomial>(&v)) {
    double sig = 0.0;
    for (int i = 0; i < theta.size(); ++i) {
      sig += m->p(i) > 0.0 ? m->p(i) * std::exp(theta(i)) : 0.0;
    }
    Vec out(theta.size());
    for (int i = 0; i < theta.size(); ++i) {
      out(i) = m->p(i) > 0.0
                   ? m->x0 * m->p(i) * std::exp(theta(i)) / (1.0 - sig)
                   : 0.0;
    }
    return out;
  }

  Vec out(theta.size());
  for (int i = 0; i < theta.size(); ++i) out(i) = dpsi_1d(v, theta(i));
  return out;
}

double log_normalizer_grad1(const ReferenceDistribution& d, double theta) {
  Vec t(1);
  t << theta;
  return log_normalizer_grad(d, t)(0);
}

// ---- mean ------------------------------------------------------------------

Vec mean(const ReferenceDistribution& d) {
  const auto& v = d.value();
  if (const auto* n = std::get_if<dist::Normal>(&v)) return n->mu;
  if (const auto* g = std::get_if<dist::NormalInverseGaussian>(&v)) {
    if (g->gamma <= 0.0)
      throw DomainError("expfam: NIG mean undefined for gamma = 0");
    return g->mu + (g->delta / g->gamma) * (g->sigma * g->beta);
  }
  Vec out(d.dim());
  if (const auto* m = std::get_if<dist::Multinomial>(&v)) {
    out = static_cast<double>(m->n) * m->p;
    return out;
  }
  if (const auto* m = std::get_if<dist::NegativeMultinomial>(&v)) {
    out = (m->x0 / m->p0) * m->p;
    return out;
  }
  if (const auto* g = std::get_if<dist::Gamma>(&v)) {
    out(0) = g->alpha / g->beta;
  } else if (const auto* l = std::get_if<dist::Laplace>(&v)) {
    out(0) = l->mu;
  } else if (const auto* p = std::get_if<dist::Poisson>(&v)) {
    out(0) = p->lambda;
  } else if (const auto* u = std::get_if<dist::DiscreteUniform>(&v)) {
    out(0) = 0.5 * (static_cast<double>(u->a) + static_cast<double>(u->b));
  } else if (const auto* u = std::get_if<dist::ContinuousUniform>(&v)) {
    out(0) = 0.5 * (u->a + u->b);
  } else if (const auto* l = std::get_if<dist::Logistic>(&v)) {
    out(0) = l->mu;
  }
  return out;
}

double mean1(const ReferenceDistribution& d) {
  if (d.dim() != 1) throw DomainError("expfam: mean1 requires d = 1");
  return mean(d)(0);
}

// ---- natural domain --------------------------------------------------------

Region natural_domain_contains(const ReferenceDistribution& d,
                               const Vec& theta) {
  if (!theta.allFinite()) return Region::outside;
  const auto& v = d.value();

  if (const auto* n = std::get_if<dist::Normal>(&v)) {
    (void)n;
    return Region::interior;
  }
  if (const auto* g = std::get_if<dist::NormalInverseGaussian>(&v)) {
    if (theta.size() != g->mu.size())
      throw DomainError("expfam: NIG theta dimension mismatch");
    Vec bt = g->beta + theta;
    double q = std::sqrt(std::max(0.0, bt.dot(g->sigma * bt)));
    if (q < g->alpha) return Region::interior;
    return q == g->alpha ? Region::boundary : Region::outside;
  }
  if (const auto* m = std::get_if<dist::Multinomial>(&v)) {
    (void)m;
    return Region::interior;
  }
  if (const auto* m = std::get_if<dist::NegativeMultinomial>(&v)) {
    if (theta.size() != m->p.size())
      throw DomainError(
          "expfam: NegativeMultinomial theta dimension mismatch");
    double ls = log_sum_p_exp(m->p, theta, 0.0);
    if (ls < 0.0) return Region::interior;
    return ls == 0.0 ? Region::boundary : Region::outside;
  }

  if (d.dim() != 1) throw DomainError("expfam: theta dimension mismatch");
  bool any_boundary = false;
  for (int i = 0; i < theta.size(); ++i) {
    Region r = theta_region_1d(v, theta(i));
    if (r == Region::outside) return Region::outside;
    if (r == Region::boundary) any_boundary = true;
  }
  return any_boundary ? Region::boundary : Region::interior;
}

Region natural_domain_contains(const ReferenceDistribution& d, double theta) {
  Vec t(1);
  t << theta;
  return natural_domain_contains(d, t);
}

}  // namespace mem
