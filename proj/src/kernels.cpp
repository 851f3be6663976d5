#include "mem/kernels.hpp"

#include <cmath>
#include <limits>

#include "mem/errors.hpp"
#include "numerics.hpp"

namespace mem {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

const char* kernel_name(KernelKind k) {
  switch (k) {
    case KernelKind::energy:
      return "energy";
    case KernelKind::boltzmann_shannon:
      return "boltzmann_shannon";
    case KernelKind::burg:
      return "burg";
  }
  return "?";
}

Region kernel_domain_contains1(KernelKind k, double x) {
  switch (k) {
    case KernelKind::energy:
      return Region::interior;
    case KernelKind::boltzmann_shannon:
      if (x > 0.0) return Region::interior;
      return x == 0.0 ? Region::boundary : Region::outside;
    case KernelKind::burg:
      return x > 0.0 ? Region::interior : Region::outside;
  }
  return Region::outside;
}

Region kernel_domain_contains(KernelKind k, const Vec& x) {
  bool any_boundary = false;
  for (int i = 0; i < x.size(); ++i) {
    Region r = kernel_domain_contains1(k, x(i));
    if (r == Region::outside) return Region::outside;
    if (r == Region::boundary) any_boundary = true;
  }
  return any_boundary ? Region::boundary : Region::interior;
}

double kernel_value1(KernelKind k, double x) {
  switch (k) {
    case KernelKind::energy:
      return 0.5 * x * x;
    case KernelKind::boltzmann_shannon:
      if (x < 0.0) return kInf;
      return detail::xlogx(x);
    case KernelKind::burg:
      if (x <= 0.0) return kInf;
      return -std::log(x);
  }
  return kInf;
}

double kernel_value(KernelKind k, const Vec& x) {
  double acc = 0.0;
  for (int i = 0; i < x.size(); ++i) {
    double t = kernel_value1(k, x(i));
    if (std::isinf(t)) return kInf;
    acc += t;
  }
  return acc;
}

double kernel_grad1(KernelKind k, double x) {
  if (kernel_domain_contains1(k, x) != Region::interior) {
    throw DomainError("kernels: gradient requires x in int dom h");
  }
  switch (k) {
    case KernelKind::energy:
      return x;
    case KernelKind::boltzmann_shannon:
      return std::log(x) + 1.0;
    case KernelKind::burg:
      return -1.0 / x;
  }
  return 0.0;
}

double kernel_grad_conj1(KernelKind k, double z) {
  switch (k) {
    case KernelKind::energy:
      return z;
    case KernelKind::boltzmann_shannon:
      return std::exp(z - 1.0);  // dom h* = R
    case KernelKind::burg:
      if (z >= 0.0)
        throw DomainError("kernels: Burg conjugate gradient requires z < 0");
      return -1.0 / z;
  }
  return 0.0;
}

Vec kernel_grad(KernelKind k, const Vec& x) {
  Vec out(x.size());
  for (int i = 0; i < x.size(); ++i) out(i) = kernel_grad1(k, x(i));
  return out;
}

Vec kernel_grad_conj(KernelKind k, const Vec& z) {
  Vec out(z.size());
  for (int i = 0; i < z.size(); ++i) out(i) = kernel_grad_conj1(k, z(i));
  return out;
}

double kernel_conj_value(KernelKind k, const Vec& z) {
  double acc = 0.0;
  for (int i = 0; i < z.size(); ++i) {
    switch (k) {
      case KernelKind::energy:
        acc += 0.5 * z(i) * z(i);
        break;
      case KernelKind::boltzmann_shannon:
        acc += std::exp(z(i) - 1.0);
        break;
      case KernelKind::burg:
        if (z(i) >= 0.0) return kInf;
        acc += -1.0 - std::log(-z(i));
        break;
    }
  }
  return acc;
}

double bregman_distance1(KernelKind k, double y, double x) {
  double gx = kernel_grad1(k, x);  // throws off-interior
  double hy = kernel_value1(k, y);
  if (std::isinf(hy)) return kInf;
  return hy - kernel_value1(k, x) - gx * (y - x);
}

double bregman_distance(KernelKind k, const Vec& y, const Vec& x) {
  if (y.size() != x.size())
    throw DomainError("kernels: Bregman distance dimension mismatch");
  double acc = 0.0;
  for (int i = 0; i < x.size(); ++i) {
    double t = bregman_distance1(k, y(i), x(i));
    if (std::isinf(t)) return kInf;
    acc += t;
  }
  return acc;
}

}  // namespace mem
