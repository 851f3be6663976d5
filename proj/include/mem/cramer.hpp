#pragma once

#include "mem/expfam.hpp"

namespace mem {

// Evaluation route for a Cramer rate function: direct formula, or a scalar
// root of the stationarity equation in the natural parameter.
enum class CramerStrategy { closed_form, implicit_scalar_root };

CramerStrategy cramer_strategy(const ReferenceDistribution& d);

// psi_P^*(y). Total: +inf outside the effective domain. Univariate families
// lift componentwise over y.
double cramer_value(const ReferenceDistribution& d, const Vec& y);
double cramer_value1(const ReferenceDistribution& d, double y);

// Gradient of psi_P^* (equals the conjugate natural parameter). Requires y
// interior to the effective domain.
Vec cramer_grad(const ReferenceDistribution& d, const Vec& y);
double cramer_grad1(const ReferenceDistribution& d, double y);

// Classification against dom psi_P^*: 'boundary' means a point of the
// effective domain that is not interior (finite value, no gradient);
// points outside the effective domain classify as 'outside'.
Region cramer_domain_classify(const ReferenceDistribution& d, const Vec& y);
Region cramer_domain_classify1(const ReferenceDistribution& d, double y);

}  // namespace mem
