#pragma once

#include "mem/expfam.hpp"

namespace mem {

// Legendre kernels generating the Bregman geometry. All three are separable,
// h(x) = sum_j h_j(x_j).
enum class KernelKind { energy, boltzmann_shannon, burg };

// h(x); +inf off-domain, with 0 log 0 = 0 for the entropy kernel.
double kernel_value(KernelKind k, const Vec& x);
double kernel_value1(KernelKind k, double x);

// grad h / grad h*. The pair is a bijection between the domain interiors.
// DomainError off the interior.
Vec kernel_grad(KernelKind k, const Vec& x);
Vec kernel_grad_conj(KernelKind k, const Vec& z);
double kernel_grad1(KernelKind k, double x);
double kernel_grad_conj1(KernelKind k, double z);

// Conjugate value h*(z) (used by the dual-symmetry checks).
double kernel_conj_value(KernelKind k, const Vec& z);

// D_h(y, x) = h(y) - h(x) - <grad h(x), y - x>; requires x interior.
double bregman_distance(KernelKind k, const Vec& y, const Vec& x);
double bregman_distance1(KernelKind k, double y, double x);

// Classification of x against dom h.
Region kernel_domain_contains(KernelKind k, const Vec& x);
Region kernel_domain_contains1(KernelKind k, double x);

const char* kernel_name(KernelKind k);

}  // namespace mem
