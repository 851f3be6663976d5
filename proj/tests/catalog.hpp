#pragma once

// Shared univariate fixtures: each distribution with interior sampling windows
// for the natural parameter and the effective domain.

#include <cmath>
#include <vector>

#include "mem/expfam.hpp"

struct Fixture {
  mem::ReferenceDistribution dist;
  double theta_lo, theta_hi;  // strictly inside int Theta_P
  double y_lo, y_hi;          // strictly inside int dom psi_P^*
};

inline std::vector<Fixture> univariate_catalog() {
  using RD = mem::ReferenceDistribution;
  std::vector<Fixture> cat;
  cat.push_back({RD::normal(0.3, 1.5), -2.0, 2.0, -3.0, 3.0});
  {
    mem::Vec mu(1), beta(1);
    mu << 0.2;
    beta << 0.3;
    mem::Mat s(1, 1);
    s << 1.2;
    double half = 1.5 / std::sqrt(1.2);  // alpha / sqrt(sigma)
    cat.push_back({RD::normal_inverse_gaussian(mu, beta, 1.5, 0.7, s),
                   -0.3 - 0.8 * half, -0.3 + 0.8 * half, -3.0, 3.0});
  }
  cat.push_back({RD::gamma(2.0, 1.5), -3.0, 1.2, 0.1, 5.0});
  cat.push_back({RD::laplace(0.4, 0.8), -1.0, 1.0, -3.0, 3.0});
  cat.push_back({RD::poisson(2.5), -2.0, 2.0, 0.2, 6.0});
  cat.push_back({RD::bernoulli(0.35), -3.0, 3.0, 0.03, 0.97});
  {
    mem::Vec p(1);
    p << 0.3;
    cat.push_back({RD::multinomial(4, p), -3.0, 3.0, 0.1, 3.85});
  }
  {
    mem::Vec p(1);
    p << 0.4;
    cat.push_back({RD::negative_multinomial(p, 2.0), -3.0, 0.7, 0.1, 6.0});
  }
  cat.push_back({RD::discrete_uniform(-1, 4), -2.0, 2.0, -0.9, 3.9});
  cat.push_back({RD::continuous_uniform(-0.5, 2.0), -2.0, 2.0, -0.45, 1.95});
  cat.push_back({RD::logistic(0.3, 0.7), -1.1, 1.1, -3.0, 3.0});
  return cat;
}
