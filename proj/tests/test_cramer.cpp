#include <doctest.h>

#include <cmath>
#include <random>

#include "catalog.hpp"
#include "mem/cramer.hpp"
#include "mem/errors.hpp"
#include "mem/oracle.hpp"

using namespace mem;

namespace {
Vec vec1(double v) {
  Vec x(1);
  x << v;
  return x;
}
}  // namespace

TEST_CASE("rate function closed forms") {
  CHECK(cramer_value1(ReferenceDistribution::normal(0.0, 1.0), 2.0) ==
        doctest::Approx(2.0).epsilon(1e-14));
  CHECK(cramer_value1(ReferenceDistribution::poisson(3.0), 3.0) ==
        doctest::Approx(0.0));
  CHECK(cramer_value1(ReferenceDistribution::gamma(1.0, 1.0), 2.0) ==
        doctest::Approx(1.0 - std::log(2.0)).epsilon(1e-14));
  // Bernoulli boundary: point mass against p = 1/2
  CHECK(cramer_value1(ReferenceDistribution::bernoulli(0.5), 0.0) ==
        doctest::Approx(std::log(2.0)).epsilon(1e-14));
}

TEST_CASE("implicit rate functions against the numeric conjugate") {
  auto logi = ReferenceDistribution::logistic(0.0, 1.0);
  CHECK(cramer_value1(logi, 1.0) ==
        doctest::Approx(numeric_conjugate(logi, 1.0)).epsilon(1e-8));
  auto cu = ReferenceDistribution::continuous_uniform(-1.0, 1.0);
  CHECK(cramer_value1(cu, 0.5) ==
        doctest::Approx(numeric_conjugate(cu, 0.5)).epsilon(1e-8));
  auto du = ReferenceDistribution::discrete_uniform(0, 4);
  CHECK(cramer_value1(du, 1.25) ==
        doctest::Approx(numeric_conjugate(du, 1.25)).epsilon(1e-8));
}

TEST_CASE("strategy tags") {
  CHECK(cramer_strategy(ReferenceDistribution::gamma(1.0, 1.0)) ==
        CramerStrategy::closed_form);
  CHECK(cramer_strategy(ReferenceDistribution::laplace(0.0, 1.0)) ==
        CramerStrategy::closed_form);
  CHECK(cramer_strategy(ReferenceDistribution::logistic(0.0, 1.0)) ==
        CramerStrategy::implicit_scalar_root);
  CHECK(cramer_strategy(ReferenceDistribution::continuous_uniform(0.0, 1.0)) ==
        CramerStrategy::implicit_scalar_root);
  CHECK(cramer_strategy(ReferenceDistribution::discrete_uniform(0, 1)) ==
        CramerStrategy::implicit_scalar_root);
}

TEST_CASE("gradients: stationarity relations") {
  CHECK(cramer_grad1(ReferenceDistribution::poisson(1.0), std::exp(1.0)) ==
        doctest::Approx(1.0).epsilon(1e-13));
  for (const auto& fx : univariate_catalog()) {
    CAPTURE(fx.dist.name());
    CHECK(std::abs(cramer_grad1(fx.dist, mean1(fx.dist))) < 1e-10);
  }
  // central differences of the value
  auto cu = ReferenceDistribution::continuous_uniform(-1.0, 1.0);
  auto f = [&](const Vec& y) { return cramer_value(cu, y); };
  double fd = fd_gradient(f, vec1(0.5), 1e-6)(0);
  CHECK(std::abs(cramer_grad1(cu, 0.5) - fd) < 1e-5);
}

TEST_CASE("domain classification") {
  CHECK(cramer_domain_classify1(ReferenceDistribution::gamma(1.0, 1.0), 0.0) ==
        Region::outside);
  Vec p(2);
  p << 0.3, 0.3;
  Vec y(2);
  y << 5.0, 0.0;
  CHECK(cramer_domain_classify(ReferenceDistribution::multinomial(5, p), y) ==
        Region::boundary);
  CHECK(cramer_domain_classify1(ReferenceDistribution::discrete_uniform(0, 4),
                                4.0) == Region::boundary);
  CHECK(cramer_domain_classify1(ReferenceDistribution::continuous_uniform(0, 1),
                                1.0) == Region::outside);
  CHECK(cramer_domain_classify1(ReferenceDistribution::poisson(1.0), 0.0) ==
        Region::boundary);
  CHECK_THROWS_AS(
      cramer_grad1(ReferenceDistribution::discrete_uniform(0, 4), 4.0),
      DomainError);
}

TEST_CASE("values at and beyond the boundary") {
  // finite discrete support keeps boundary values finite
  CHECK(cramer_value1(ReferenceDistribution::discrete_uniform(0, 4), 4.0) ==
        doctest::Approx(std::log(5.0)).epsilon(1e-12));
  CHECK(cramer_value1(ReferenceDistribution::poisson(2.0), 0.0) ==
        doctest::Approx(2.0));
  CHECK(std::isinf(
      cramer_value1(ReferenceDistribution::gamma(1.0, 1.0), -1.0)));
  CHECK(std::isinf(
      cramer_value1(ReferenceDistribution::continuous_uniform(0.0, 1.0), 1.0)));
  // degenerate discrete uniform is the indicator of {a}
  auto degen = ReferenceDistribution::discrete_uniform(3, 3);
  CHECK(cramer_value1(degen, 3.0) == 0.0);
  CHECK(std::isinf(cramer_value1(degen, 2.0)));
}

TEST_CASE("nonnegativity with a unique zero at the mean") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (const auto& fx : univariate_catalog()) {
    CAPTURE(fx.dist.name());
    CHECK(cramer_value1(fx.dist, mean1(fx.dist)) ==
          doctest::Approx(0.0).epsilon(1e-12));
    for (int i = 0; i < 200; ++i) {
      double y = fx.y_lo + (fx.y_hi - fx.y_lo) * unif(rng);
      CHECK(cramer_value1(fx.dist, y) >= -1e-12);
    }
  }
}

TEST_CASE("fenchel-young equality along the gradient map") {
  std::mt19937_64 rng(22);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (const auto& fx : univariate_catalog()) {
    CAPTURE(fx.dist.name());
    for (int i = 0; i < 20; ++i) {
      double th = fx.theta_lo + (fx.theta_hi - fx.theta_lo) * unif(rng);
      double y = log_normalizer_grad1(fx.dist, th);
      double gap = log_normalizer(fx.dist, th) + cramer_value1(fx.dist, y) -
                   y * th;
      CHECK(std::abs(gap) <= 1e-8);
    }
  }
}

TEST_CASE("gradient inverts the log-normalizer gradient") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (const auto& fx : univariate_catalog()) {
    CAPTURE(fx.dist.name());
    for (int i = 0; i < 20; ++i) {
      double th = fx.theta_lo + (fx.theta_hi - fx.theta_lo) * unif(rng);
      double y = log_normalizer_grad1(fx.dist, th);
      CHECK(cramer_grad1(fx.dist, y) ==
            doctest::Approx(th).epsilon(1e-7));
    }
  }
}

TEST_CASE("oracle equivalence on random interior points") {
  std::mt19937_64 rng(24);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (const auto& fx : univariate_catalog()) {
    CAPTURE(fx.dist.name());
    for (int i = 0; i < 20; ++i) {
      double y = fx.y_lo + (fx.y_hi - fx.y_lo) * unif(rng);
      CHECK(std::abs(cramer_value1(fx.dist, y) -
                     numeric_conjugate(fx.dist, y)) <= 1e-6);
    }
  }
}

TEST_CASE("convexity of the rate function sampled along segments") {
  std::mt19937_64 rng(25);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (const auto& fx : univariate_catalog()) {
    CAPTURE(fx.dist.name());
    for (int i = 0; i < 100; ++i) {
      double y1 = fx.y_lo + (fx.y_hi - fx.y_lo) * unif(rng);
      double y2 = fx.y_lo + (fx.y_hi - fx.y_lo) * unif(rng);
      double lam = unif(rng);
      double lhs = cramer_value1(fx.dist, lam * y1 + (1.0 - lam) * y2);
      double rhs = lam * cramer_value1(fx.dist, y1) +
                   (1.0 - lam) * cramer_value1(fx.dist, y2);
      CHECK(lhs <= rhs + 1e-10);
    }
  }
}

TEST_CASE("multivariate rate functions") {
  Vec mu(2);
  mu << 1.0, -1.0;
  Mat sigma(2, 2);
  sigma << 2.0, 0.3, 0.3, 1.0;
  auto n = ReferenceDistribution::normal(mu, sigma);
  Vec y(2);
  y << 2.0, 0.5;
  Vec r = y - mu;
  double expect = 0.5 * r.dot(sigma.llt().solve(r));
  CHECK(cramer_value(n, y) == doctest::Approx(expect).epsilon(1e-13));
  CHECK((cramer_grad(n, y) - sigma.llt().solve(r)).norm() < 1e-13);

  // multivariate NIG value at the mean is zero (fenchel-young corner)
  Vec beta(2);
  beta << 0.2, 0.1;
  auto nig =
      ReferenceDistribution::normal_inverse_gaussian(mu, beta, 1.4, 0.9, sigma);
  CHECK(cramer_value(nig, mean(nig)) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(cramer_grad(nig, mean(nig)).norm() < 1e-12);

  // multinomial: value and gradient on the open sub-simplex
  Vec p(2);
  p << 0.25, 0.25;
  auto m = ReferenceDistribution::multinomial(4, p);
  Vec ym(2);
  ym << 1.0, 2.0;
  double v = 0.0;
  v += 1.0 * std::log(1.0 / (4 * 0.25));
  v += 2.0 * std::log(2.0 / (4 * 0.25));
  v += 1.0 * std::log(1.0 / (4 * 0.5));  // remainder category
  CHECK(cramer_value(m, ym) == doctest::Approx(v).epsilon(1e-13));
  Vec g = cramer_grad(m, ym);
  CHECK(g(0) == doctest::Approx(std::log(1.0 * 0.5 / (0.25 * 1.0))));
  CHECK(g(1) == doctest::Approx(std::log(2.0 * 0.5 / (0.25 * 1.0))));
}
