#include "schwarz/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "schwarz/errors.hpp"

namespace schwarz {

double unit_ball_volume(int m) {
    if (m < 0) throw precondition_error("unit_ball_volume: negative dimension");
    if (m == 0) return 1.0;
    return std::pow(M_PI, 0.5 * m) / std::tgamma(0.5 * m + 1.0);
}

double sphere_boundary_measure(int n, double r) {
    if (n < 2) throw precondition_error("sphere_boundary_measure: dimension must be >= 2");
    if (r < 0.0) throw precondition_error("sphere_boundary_measure: negative radius");
    if (n == 2) return r > 0.0 ? 2.0 : 0.0;
    return (n - 1) * unit_ball_volume(n - 1) * std::pow(r, n - 2);
}

double lens_area(double d, double R, double r) {
    if (d >= R + r) return 0.0;
    if (d <= std::fabs(R - r)) {
        double s = std::min(R, r);
        return M_PI * s * s;
    }
    double a1 = std::acos(std::clamp((d * d + R * R - r * r) / (2.0 * d * R), -1.0, 1.0));
    double a2 = std::acos(std::clamp((d * d + r * r - R * R) / (2.0 * d * r), -1.0, 1.0));
    double t = (R + r - d) * (d + R - r) * (d + r - R) * (d + r + R);
    return R * R * a1 + r * r * a2 - 0.5 * std::sqrt(std::max(t, 0.0));
}

double ball_symmetric_difference(int n, double d, double r1, double r2) {
    if (r1 < 0.0 || r2 < 0.0 || d < 0.0)
        throw precondition_error("ball_symmetric_difference: negative argument");
    const double omega = unit_ball_volume(n - 1);
    const double rb = std::max(r1, r2);
    const double rs = std::min(r1, r2);
    if (rb == 0.0) return 0.0;
    // Nested: the measure difference, computed so that it matches the slice
    // measures to a few ulp.
    if (d + rs <= rb || rs == 0.0)
        return omega * (std::pow(rb, n - 1) - std::pow(rs, n - 1));
    if (d >= r1 + r2) return omega * (std::pow(r1, n - 1) + std::pow(r2, n - 1));
    if (n == 2) {
        // Intervals (c - r, c + r) with centers d apart, not nested, not disjoint.
        double overlap = std::max(0.0, r1 + r2 - d);
        return 2.0 * r1 + 2.0 * r2 - 2.0 * overlap;
    }
    if (n == 3) return M_PI * r1 * r1 + M_PI * r2 * r2 - 2.0 * lens_area(d, r1, r2);
    throw precondition_error(
        "ball_symmetric_difference: overlapping balls unsupported for n >= 4");
}

} // namespace schwarz
