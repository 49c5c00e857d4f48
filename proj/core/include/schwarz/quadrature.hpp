#pragma once

#include <functional>

namespace schwarz {
namespace quad {

// Adaptive Gauss-Legendre integration over [a, b]. Bisects until the
// 15-point estimate of an interval agrees with the sum over its halves to
// the (absolute + relative) tolerance. Deterministic: fixed node tables,
// fixed subdivision and summation order.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol = 1e-9);

} // namespace quad
} // namespace schwarz
