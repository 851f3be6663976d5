#include <doctest.h>

#include <cmath>
#include <random>

#include "catalog.hpp"
#include "mem/errors.hpp"
#include "mem/expfam.hpp"
#include "mem/oracle.hpp"

using namespace mem;

namespace {
Vec vec1(double v) {
  Vec x(1);
  x << v;
  return x;
}
}  // namespace

TEST_CASE("log normalizer closed forms") {
  CHECK(log_normalizer(ReferenceDistribution::normal(0.0, 1.0), 2.0) ==
        doctest::Approx(2.0).epsilon(1e-14));
  CHECK(log_normalizer(ReferenceDistribution::poisson(1.0), 0.0) == 0.0);
  CHECK(log_normalizer(ReferenceDistribution::continuous_uniform(-1.0, 1.0),
                       0.0) == 0.0);
  CHECK(log_normalizer(ReferenceDistribution::gamma(2.0, 1.0), 0.5) ==
        doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-14));
}

TEST_CASE("log normalizer is +inf outside the natural domain") {
  CHECK(std::isinf(log_normalizer(ReferenceDistribution::gamma(1.0, 1.0), 2.0)));
  CHECK(std::isinf(log_normalizer(ReferenceDistribution::laplace(0.0, 1.0), 1.0)));
  CHECK(std::isinf(log_normalizer(ReferenceDistribution::logistic(0.0, 2.0), 0.6)));
  CHECK_THROWS_AS(log_normalizer(ReferenceDistribution::poisson(1.0),
                                 vec1(std::nan(""))),
                  DomainError);
}

TEST_CASE("gradient closed forms and mean identity") {
  CHECK(log_normalizer_grad1(ReferenceDistribution::normal(0.0, 1.0), 3.0) ==
        doctest::Approx(3.0).epsilon(1e-14));
  CHECK(log_normalizer_grad1(ReferenceDistribution::poisson(2.0),
                             std::log(2.0)) ==
        doctest::Approx(4.0).epsilon(1e-13));
  for (const auto& fx : univariate_catalog()) {
    CAPTURE(fx.dist.name());
    CHECK(log_normalizer_grad1(fx.dist, 0.0) ==
          doctest::Approx(mean1(fx.dist)).epsilon(1e-12));
    CHECK(log_normalizer(fx.dist, 0.0) == doctest::Approx(0.0).epsilon(1e-14));
  }
}

TEST_CASE("means of the catalog") {
  CHECK(mean1(ReferenceDistribution::gamma(3.0, 2.0)) == doctest::Approx(1.5));
  CHECK(mean1(ReferenceDistribution::discrete_uniform(1, 5)) ==
        doctest::Approx(3.0));
  CHECK(mean1(ReferenceDistribution::bernoulli(0.25)) == doctest::Approx(0.25));

  // NIG: mu + delta Sigma beta / gamma
  Vec mu(2), beta(2);
  mu << 1.0, -0.5;
  beta << 0.2, 0.1;
  Mat sigma(2, 2);
  sigma << 1.0, 0.2, 0.2, 0.8;
  auto nig =
      ReferenceDistribution::normal_inverse_gaussian(mu, beta, 1.4, 0.9, sigma);
  double gamma = std::sqrt(1.4 * 1.4 - beta.dot(sigma * beta));
  Vec expect = mu + (0.9 / gamma) * (sigma * beta);
  CHECK((mean(nig) - expect).norm() < 1e-14);

  // negative multinomial: x0 p / p0
  Vec p(2);
  p << 0.3, 0.2;
  auto nm = ReferenceDistribution::negative_multinomial(p, 2.0);
  CHECK(mean(nm)(0) == doctest::Approx(2.0 * 0.3 / 0.5));
  CHECK(mean(nm)(1) == doctest::Approx(2.0 * 0.2 / 0.5));
}

TEST_CASE("natural domain classification") {
  CHECK(natural_domain_contains(ReferenceDistribution::gamma(1.0, 1.0),
                                0.999) == Region::interior);
  CHECK(natural_domain_contains(ReferenceDistribution::laplace(0.0, 1.0),
                                1.0) == Region::boundary);
  CHECK(natural_domain_contains(ReferenceDistribution::logistic(0.0, 2.0),
                                0.6) == Region::outside);
  CHECK_THROWS_AS(
      log_normalizer_grad1(ReferenceDistribution::gamma(1.0, 1.0), 1.0),
      DomainError);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(ReferenceDistribution::gamma(-1.0, 1.0), DomainError);
  CHECK_THROWS_AS(ReferenceDistribution::poisson(0.0), DomainError);
  CHECK_THROWS_AS(ReferenceDistribution::bernoulli(1.0), DomainError);
  CHECK_THROWS_AS(ReferenceDistribution::discrete_uniform(3, 1), DomainError);
  CHECK_THROWS_AS(ReferenceDistribution::logistic(0.0, -2.0), DomainError);
  Vec p(2);
  p << 0.6, 0.5;
  CHECK_THROWS_AS(ReferenceDistribution::multinomial(2, p), DomainError);
  // NIG needs alpha >= sqrt(beta' Sigma beta)
  Vec mu(1), beta(1);
  mu << 0.0;
  beta << 2.0;
  Mat s(1, 1);
  s << 1.0;
  CHECK_THROWS_AS(
      ReferenceDistribution::normal_inverse_gaussian(mu, beta, 1.0, 1.0, s),
      DomainError);
  Mat bad(2, 2);
  bad << 1.0, 2.0, 2.0, 1.0;  // indefinite
  Vec mu2 = Vec::Zero(2);
  CHECK_THROWS_AS(ReferenceDistribution::normal(mu2, bad), DomainError);
}

TEST_CASE("convexity of psi sampled along segments") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (const auto& fx : univariate_catalog()) {
    CAPTURE(fx.dist.name());
    for (int i = 0; i < 100; ++i) {
      double t1 = fx.theta_lo + (fx.theta_hi - fx.theta_lo) * unif(rng);
      double t2 = fx.theta_lo + (fx.theta_hi - fx.theta_lo) * unif(rng);
      double lam = unif(rng);
      double lhs = log_normalizer(fx.dist, lam * t1 + (1.0 - lam) * t2);
      double rhs = lam * log_normalizer(fx.dist, t1) +
                   (1.0 - lam) * log_normalizer(fx.dist, t2);
      CHECK(lhs <= rhs + 1e-10);
    }
  }
}

TEST_CASE("gradient matches central differences") {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (const auto& fx : univariate_catalog()) {
    CAPTURE(fx.dist.name());
    auto psi = [&](const Vec& th) { return log_normalizer(fx.dist, th); };
    for (int i = 0; i < 20; ++i) {
      double th = fx.theta_lo + (fx.theta_hi - fx.theta_lo) * unif(rng);
      double g = log_normalizer_grad1(fx.dist, th);
      double fd = fd_gradient(psi, vec1(th), 1e-6)(0);
      CHECK(std::abs(g - fd) <= 1e-5 * std::max(1.0, std::abs(g)));
    }
  }
}

TEST_CASE("multivariate normal and lifted univariate evaluation") {
  Vec mu(2);
  mu << 1.0, 2.0;
  Mat sigma(2, 2);
  sigma << 2.0, 0.5, 0.5, 1.0;
  auto n = ReferenceDistribution::normal(mu, sigma);
  Vec th(2);
  th << 0.3, -0.2;
  CHECK(log_normalizer(n, th) ==
        doctest::Approx(mu.dot(th) + 0.5 * th.dot(sigma * th)).epsilon(1e-14));
  CHECK((log_normalizer_grad(n, th) - (mu + sigma * th)).norm() < 1e-14);

  // i.i.d. lift of a univariate family sums componentwise
  auto pois = ReferenceDistribution::poisson(2.0);
  Vec th3(3);
  th3 << 0.1, -0.3, 0.7;
  double acc = 0.0;
  for (int i = 0; i < 3; ++i) acc += log_normalizer(pois, th3(i));
  CHECK(log_normalizer(pois, th3) == doctest::Approx(acc).epsilon(1e-14));
}
