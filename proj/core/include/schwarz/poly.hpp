#pragma once

#include <optional>
#include <vector>

namespace schwarz {

// Dense univariate polynomials, coefficients in the monomial basis
// (p(x) = sum_j c[j] x^j). Degrees stay <= 8 throughout the library, so the
// global basis is well conditioned at desk scale.
namespace poly {

double eval(const std::vector<double>& c, double x);
std::vector<double> derivative(const std::vector<double>& c);
std::vector<double> antiderivative(const std::vector<double>& c);
double integral(const std::vector<double>& c, double a, double b);

// Trim negligible leading coefficients (relative to the largest magnitude).
std::vector<double> trimmed(const std::vector<double>& c, double rel_tol = 1e-14);

int degree(const std::vector<double>& c);
bool is_zero(const std::vector<double>& c, double abs_tol = 0.0);

std::vector<double> add(const std::vector<double>& a, const std::vector<double>& b);
std::vector<double> scale(const std::vector<double>& a, double s);
std::vector<double> multiply(const std::vector<double>& a, const std::vector<double>& b);
std::vector<double> power(const std::vector<double>& a, int k);

// Substitute x -> alpha + beta*x.
std::vector<double> compose_affine(const std::vector<double>& c, double alpha, double beta);

// All real roots in [a, b], ascending, found by recursive critical-point
// isolation plus bisection. Touching roots (no sign change) are reported when
// |p| at a critical point falls below touch_tol.
std::vector<double> roots_in(const std::vector<double>& c, double a, double b,
                             double touch_tol = 0.0);

// Total variation of p over [a, b]: sum of |p| increments between consecutive
// critical points. Exact up to root-finding accuracy.
double total_variation(const std::vector<double>& c, double a, double b);

double min_on(const std::vector<double>& c, double a, double b);
double max_abs_on(const std::vector<double>& c, double a, double b);

// Polynomial k-th root: s with s^k == p, when one exists (verified to
// rel_tol); the leading coefficient of s is chosen positive.
std::optional<std::vector<double>> kth_root(const std::vector<double>& p, int k,
                                            double rel_tol = 1e-9);

} // namespace poly
} // namespace schwarz
