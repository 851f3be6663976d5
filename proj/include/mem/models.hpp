#pragma once

#include <optional>
#include <vector>

#include "mem/cramer.hpp"
#include "mem/expfam.hpp"
#include "mem/kernels.hpp"
#include "mem/linops.hpp"
#include "mem/prox.hpp"

namespace mem {

enum class FidelityKind { normal, poisson, gamma };

// Data-fit term psi*_{P_yhat}(A x) for the Normal / Poisson / Gamma(beta=1)
// reference families. Domain constraints are enforced at construction:
// Poisson needs yhat > 0 and A nonnegative with no zero rows or columns;
// Gamma needs yhat >= 0 and the same operator class.
struct FidelityFamily {
  FidelityKind kind;
  LinearOperator op;
  Vec yhat;

  static FidelityFamily make(FidelityKind kind, LinearOperator op, Vec yhat);
};

double fidelity_value(const FidelityFamily& f, const Vec& x);
Vec fidelity_grad(const FidelityFamily& f, const Vec& x);

// Smooth-adaptability constant for the kernel paired with the family:
// lambda_max(A'A) (Normal/Energy), ||A||_1 (Poisson/entropy),
// ||yhat||_1 (Gamma/Burg).
double smoothness_constant(const FidelityFamily& f);

KernelKind paired_kernel(FidelityKind kind);
const char* fidelity_name(FidelityKind kind);

// Prior of the regularizer. Either a joint multivariate distribution, or a
// product of univariate factors: a single factor broadcast i.i.d., or one
// factor per coordinate (e.g. pixelwise Bernoulli parameters).
class Prior {
 public:
  static Prior joint(ReferenceDistribution d);
  static Prior iid(ReferenceDistribution d);
  static Prior per_coordinate(std::vector<ReferenceDistribution> ds);

  // sum of factor rate functions (or the joint rate function)
  double value(const Vec& x) const;
  Vec grad(const Vec& x) const;
  Vec mean_vector(Eigen::Index d) const;
  Region domain_classify(const Vec& x) const;
  // prox^h_{t phi} applied factor-wise
  ProxResult prox(KernelKind k, double t, const Vec& xbar) const;

  bool is_joint() const { return joint_; }
  const std::vector<ReferenceDistribution>& factors() const {
    return factors_;
  }

 private:
  Prior(std::vector<ReferenceDistribution> f, bool joint)
      : factors_(std::move(f)), joint_(joint) {}
  const ReferenceDistribution& factor(Eigen::Index i) const {
    return factors_.size() == 1 ? factors_.front()
                                : factors_[size_t(i)];
  }
  std::vector<ReferenceDistribution> factors_;
  bool joint_;
};

// tau * psi_R^*(x), or the composite forms tau * psi_R^*(L x) /
// tau * sum_i psi_R^*(L_i x). Composite regularizers have no tractable prox
// and are rejected by the prox-based solvers.
struct Regularizer {
  Prior prior;
  double weight;                       // tau > 0
  std::optional<LinearOperator> L;     // composite form when present
  Eigen::Index block = 0;              // >0: sum over rows of L in blocks

  static Regularizer plain(Prior prior, double weight);
  static Regularizer composite(Prior prior, double weight, LinearOperator L,
                               Eigen::Index block);
  double value(const Vec& x) const;
};

struct Problem {
  FidelityFamily fidelity;
  std::optional<Regularizer> reg;
  KernelKind kernel;
  // overrides the Table-3 constant when the default pairing is bypassed
  std::optional<double> smoothness_override;

  static Problem make(FidelityFamily fidelity, std::optional<Regularizer> reg,
                      std::optional<KernelKind> kernel = std::nullopt,
                      std::optional<double> smoothness_override = std::nullopt);
};

// F(x) = fidelity + tau * regularizer; +inf off-domain.
double objective(const Problem& p, const Vec& x);

}  // namespace mem
