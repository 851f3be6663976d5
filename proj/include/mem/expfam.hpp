#pragma once

#include <Eigen/Dense>
#include <string>
#include <variant>

namespace mem {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

// Three-way classification of a point against a convex domain.
enum class Region { interior, boundary, outside };

namespace dist {

struct Normal {
  Vec mu;
  Mat sigma;            // SPD covariance
  Eigen::LLT<Mat> llt;  // cached factorization of sigma
};

// Multivariate normal-inverse Gaussian. gamma = sqrt(alpha^2 - beta' Sigma beta).
struct NormalInverseGaussian {
  Vec mu;
  Vec beta;
  double alpha;
  double delta;
  Mat sigma;
  Eigen::LLT<Mat> llt;
  double gamma;
};

struct Gamma {
  double alpha;
  double beta;
};

struct Laplace {
  double mu;
  double b;
};

struct Poisson {
  double lambda;
};

// Minimal form: d retained categories with p > 0 componentwise and sum(p) < 1.
struct Multinomial {
  long n;
  Vec p;
  double p0;  // 1 - sum(p)
};

struct NegativeMultinomial {
  Vec p;      // p in [0,1)^d, sum(p) < 1
  double x0;  // fixed failure-count parameter
  double p0;
};

struct DiscreteUniform {
  long a;
  long b;
};

struct ContinuousUniform {
  double a;
  double b;
};

struct Logistic {
  double mu;
  double s;
};

}  // namespace dist

// Tagged union over the supported reference distributions. Parameters are
// validated at construction; instances are immutable. Univariate families are
// lifted componentwise (i.i.d. product) when evaluated on vectors.
class ReferenceDistribution {
 public:
  using Variant =
      std::variant<dist::Normal, dist::NormalInverseGaussian, dist::Gamma,
                   dist::Laplace, dist::Poisson, dist::Multinomial,
                   dist::NegativeMultinomial, dist::DiscreteUniform,
                   dist::ContinuousUniform, dist::Logistic>;

  static ReferenceDistribution normal(Vec mu, Mat sigma);
  static ReferenceDistribution normal(double mu, double variance);
  static ReferenceDistribution normal_inverse_gaussian(Vec mu, Vec beta,
                                                       double alpha,
                                                       double delta, Mat sigma);
  static ReferenceDistribution gamma(double alpha, double beta);
  static ReferenceDistribution laplace(double mu, double b);
  static ReferenceDistribution poisson(double lambda);
  static ReferenceDistribution multinomial(long n, Vec p);
  // Bernoulli(p) is Multinomial(n = 1, d = 1).
  static ReferenceDistribution bernoulli(double p);
  static ReferenceDistribution negative_multinomial(Vec p, double x0);
  static ReferenceDistribution discrete_uniform(long a, long b);
  static ReferenceDistribution continuous_uniform(double a, double b);
  static ReferenceDistribution logistic(double mu, double s);

  // Intrinsic dimension (1 for the univariate families).
  int dim() const;
  bool univariate() const { return dim() == 1; }
  std::string name() const;

  const Variant& value() const { return v_; }

  template <class T>
  const T* get_if() const {
    return std::get_if<T>(&v_);
  }

 private:
  explicit ReferenceDistribution(Variant v) : v_(std::move(v)) {}
  Variant v_;
};

// Log-normalizer (cumulant generating function) psi_P. Total via extended
// reals: returns +inf outside the natural parameter space. Univariate
// families accept theta of any length and sum componentwise.
double log_normalizer(const ReferenceDistribution& d, const Vec& theta);
double log_normalizer(const ReferenceDistribution& d, double theta);

// Gradient of psi_P, the mean of the tilted distribution. Requires theta in
// the interior of the natural parameter space (DomainError otherwise).
Vec log_normalizer_grad(const ReferenceDistribution& d, const Vec& theta);
double log_normalizer_grad1(const ReferenceDistribution& d, double theta);

// E_P. Length equals dim().
Vec mean(const ReferenceDistribution& d);
double mean1(const ReferenceDistribution& d);

// Classification of theta against the natural parameter space.
Region natural_domain_contains(const ReferenceDistribution& d,
                               const Vec& theta);
Region natural_domain_contains(const ReferenceDistribution& d, double theta);

}  // namespace mem
