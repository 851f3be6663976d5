#include "mem/models.hpp"

#include <cmath>
#include <limits>

#include "mem/errors.hpp"
#include "numerics.hpp"

namespace mem {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

// A in C0: entrywise nonnegative with no zero rows or columns. For
// matrix-free nonnegative structures the row/column sums are A 1 and A' 1.
void require_c0(const LinearOperator& a, const char* who) {
  if (!a.nonnegative()) {
    throw DomainError(std::string(who) +
                      ": operator must be entrywise nonnegative (class C0)");
  }
  Vec rows = a.apply(Vec::Ones(a.cols()));
  Vec cols = a.adjoint(Vec::Ones(a.rows()));
  if ((rows.array() <= 0.0).any() || (cols.array() <= 0.0).any()) {
    throw DomainError(std::string(who) +
                      ": operator must have no zero rows or columns (C0)");
  }
}

}  // namespace

const char* fidelity_name(FidelityKind kind) {
  switch (kind) {
    case FidelityKind::normal:
      return "normal";
    case FidelityKind::poisson:
      return "poisson";
    case FidelityKind::gamma:
      return "gamma";
  }
  return "?";
}

KernelKind paired_kernel(FidelityKind kind) {
  switch (kind) {
    case FidelityKind::normal:
      return KernelKind::energy;
    case FidelityKind::poisson:
      return KernelKind::boltzmann_shannon;
    case FidelityKind::gamma:
      return KernelKind::burg;
  }
  return KernelKind::energy;
}

FidelityFamily FidelityFamily::make(FidelityKind kind, LinearOperator op,
                                    Vec yhat) {
  if (op.rows() != yhat.size()) {
    throw DomainError("models: observation length must match operator rows");
  }
  if (!yhat.allFinite()) {
    throw DomainError("models: observation must be finite");
  }
  switch (kind) {
    case FidelityKind::normal:
      break;
    case FidelityKind::poisson:
      require_c0(op, "models(poisson)");
      if ((yhat.array() <= 0.0).any()) {
        throw DomainError("models: Poisson family requires yhat > 0");
      }
      break;
    case FidelityKind::gamma:
      require_c0(op, "models(gamma)");
      if ((yhat.array() < 0.0).any()) {
        throw DomainError("models: Gamma family requires yhat >= 0");
      }
      break;
  }
  return FidelityFamily{kind, std::move(op), std::move(yhat)};
}

double fidelity_value(const FidelityFamily& f, const Vec& x) {
  if (x.size() != f.op.cols()) {
    throw DomainError("models: x dimension mismatch");
  }
  switch (f.kind) {
    case FidelityKind::normal: {
      return 0.5 * (f.op.apply(x) - f.yhat).squaredNorm();
    }
    case FidelityKind::poisson: {
      if ((x.array() < 0.0).any()) return kInf;
      Vec u = f.op.apply(x);
      double acc = 0.0;
      for (Eigen::Index i = 0; i < u.size(); ++i) {
        if (u(i) < 0.0) return kInf;
        acc += detail::xlogy(u(i), u(i) / f.yhat(i)) - u(i) + f.yhat(i);
      }
      return acc;
    }
    case FidelityKind::gamma: {
      if ((x.array() <= 0.0).any()) return kInf;
      Vec u = f.op.apply(x);
      double acc = 0.0;
      for (Eigen::Index i = 0; i < u.size(); ++i) {
        if (u(i) <= 0.0) return kInf;
        acc += u(i) - f.yhat(i) * std::log(u(i)) -
               (f.yhat(i) - detail::xlogx(f.yhat(i)));
      }
      return acc;
    }
  }
  return kInf;
}

Vec fidelity_grad(const FidelityFamily& f, const Vec& x) {
  if (x.size() != f.op.cols()) {
    throw DomainError("models: x dimension mismatch");
  }
  switch (f.kind) {
    case FidelityKind::normal: {
      return f.op.adjoint(f.op.apply(x) - f.yhat);
    }
    case FidelityKind::poisson: {
      Vec u = f.op.apply(x);
      if ((u.array() <= 0.0).any()) {
        throw DomainError(
            "models: Poisson gradient undefined where <a_i, x> = 0");
      }
      Vec g(u.size());
      for (Eigen::Index i = 0; i < u.size(); ++i) {
        g(i) = std::log(u(i) / f.yhat(i));
      }
      return f.op.adjoint(g);
    }
    case FidelityKind::gamma: {
      Vec u = f.op.apply(x);
      if ((u.array() <= 0.0).any()) {
        throw DomainError("models: Gamma gradient requires <a_i, x> > 0");
      }
      Vec g(u.size());
      for (Eigen::Index i = 0; i < u.size(); ++i) {
        g(i) = 1.0 - f.yhat(i) / u(i);
      }
      return f.op.adjoint(g);
    }
  }
  throw DomainError("models: unknown fidelity");
}

double smoothness_constant(const FidelityFamily& f) {
  switch (f.kind) {
    case FidelityKind::normal: {
      // lambda_max(A'A): the constant certifying L h - f convex for the
      // energy kernel.
      double s = op_norm_2(f.op);
      return s * s;
    }
    case FidelityKind::poisson:
      return norm_1_columns(f.op);
    case FidelityKind::gamma:
      return f.yhat.cwiseAbs().sum();
  }
  return 0.0;
}

// ---- Prior -----------------------------------------------------------------

Prior Prior::joint(ReferenceDistribution d) {
  std::vector<ReferenceDistribution> f;
  f.push_back(std::move(d));
  return Prior(std::move(f), true);
}

Prior Prior::iid(ReferenceDistribution d) {
  if (!d.univariate()) {
    throw DomainError("models: i.i.d. prior lift requires a univariate factor");
  }
  std::vector<ReferenceDistribution> f;
  f.push_back(std::move(d));
  return Prior(std::move(f), false);
}

Prior Prior::per_coordinate(std::vector<ReferenceDistribution> ds) {
  if (ds.empty()) throw DomainError("models: empty per-coordinate prior");
  for (const auto& d : ds) {
    if (!d.univariate()) {
      throw DomainError(
          "models: per-coordinate prior factors must be univariate");
    }
  }
  return Prior(std::move(ds), false);
}

double Prior::value(const Vec& x) const {
  if (joint_ || factors_.size() == 1) {
    return cramer_value(factors_.front(), x);
  }
  if (x.size() != Eigen::Index(factors_.size())) {
    throw DomainError("models: prior dimension mismatch");
  }
  double acc = 0.0;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    double t = cramer_value1(factor(i), x(i));
    if (std::isinf(t)) return kInf;
    acc += t;
  }
  return acc;
}

Vec Prior::grad(const Vec& x) const {
  if (joint_ || factors_.size() == 1) {
    return cramer_grad(factors_.front(), x);
  }
  if (x.size() != Eigen::Index(factors_.size())) {
    throw DomainError("models: prior dimension mismatch");
  }
  Vec out(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    out(i) = cramer_grad1(factor(i), x(i));
  }
  return out;
}

Vec Prior::mean_vector(Eigen::Index d) const {
  if (joint_) {
    Vec m = mean(factors_.front());
    if (m.size() != d) throw DomainError("models: prior dimension mismatch");
    return m;
  }
  Vec out(d);
  if (factors_.size() == 1) {
    out.setConstant(mean1(factors_.front()));
    return out;
  }
  if (d != Eigen::Index(factors_.size())) {
    throw DomainError("models: prior dimension mismatch");
  }
  for (Eigen::Index i = 0; i < d; ++i) out(i) = mean1(factor(i));
  return out;
}

Region Prior::domain_classify(const Vec& x) const {
  if (joint_ || factors_.size() == 1) {
    return cramer_domain_classify(factors_.front(), x);
  }
  bool any_boundary = false;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    Region r = cramer_domain_classify1(factor(i), x(i));
    if (r == Region::outside) return Region::outside;
    if (r == Region::boundary) any_boundary = true;
  }
  return any_boundary ? Region::boundary : Region::interior;
}

ProxResult Prior::prox(KernelKind k, double t, const Vec& xbar) const {
  if (joint_ || factors_.size() == 1) {
    return bregman_prox(ProxRequest{k, factors_.front(), t, xbar});
  }
  if (xbar.size() != Eigen::Index(factors_.size())) {
    throw DomainError("models: prior dimension mismatch");
  }
  ProxResult out;
  out.x.resize(xbar.size());
  out.theta.resize(xbar.size());
  out.residual = 0.0;
  Vec one(1);
  for (Eigen::Index i = 0; i < xbar.size(); ++i) {
    one(0) = xbar(i);
    ProxResult r = bregman_prox(ProxRequest{k, factor(i), t, one});
    out.x(i) = r.x(0);
    out.theta(i) = r.theta(0);
    out.residual = std::max(out.residual, r.residual);
  }
  return out;
}

// ---- Regularizer / Problem ---------------------------------------------------

Regularizer Regularizer::plain(Prior prior, double weight) {
  if (!(weight > 0.0) || !std::isfinite(weight)) {
    throw DomainError("models: regularizer weight must be positive");
  }
  return Regularizer{std::move(prior), weight, std::nullopt, 0};
}

Regularizer Regularizer::composite(Prior prior, double weight,
                                   LinearOperator L, Eigen::Index block) {
  if (!(weight > 0.0) || !std::isfinite(weight)) {
    throw DomainError("models: regularizer weight must be positive");
  }
  if (block < 0 || (block > 0 && L.rows() % block != 0)) {
    throw DomainError("models: composite block size must divide L rows");
  }
  return Regularizer{std::move(prior), weight, std::move(L), block};
}

double Regularizer::value(const Vec& x) const {
  if (!L) return weight * prior.value(x);
  Vec y = L->apply(x);
  if (block == 0) return weight * prior.value(y);
  double acc = 0.0;
  for (Eigen::Index at = 0; at < y.size(); at += block) {
    double t = prior.value(y.segment(at, block));
    if (std::isinf(t)) return kInf;
    acc += t;
  }
  return weight * acc;
}

Problem Problem::make(FidelityFamily fidelity, std::optional<Regularizer> reg,
                      std::optional<KernelKind> kernel,
                      std::optional<double> smoothness_override) {
  KernelKind paired = paired_kernel(fidelity.kind);
  KernelKind k = kernel.value_or(paired);
  if (k != paired && !smoothness_override) {
    throw DomainError(
        "models: overriding the Table-3 kernel pairing requires an explicit "
        "smoothness bound");
  }
  if (smoothness_override && !(*smoothness_override > 0.0)) {
    throw DomainError("models: smoothness override must be positive");
  }
  return Problem{std::move(fidelity), std::move(reg), k, smoothness_override};
}

double objective(const Problem& p, const Vec& x) {
  double fid = fidelity_value(p.fidelity, x);
  if (std::isinf(fid)) return kInf;
  if (!p.reg) return fid;
  double r = p.reg->value(x);
  if (std::isinf(r)) return kInf;
  return fid + r;
}

}  // namespace mem
