#include "schwarz/quadrature.hpp"

#include <array>
#include <cmath>

namespace schwarz {
namespace quad {

namespace {

constexpr int kNodes = 15;

struct GaussTable {
    std::array<double, kNodes> x;
    std::array<double, kNodes> w;
};

// Nodes/weights computed by Newton iteration on the Legendre polynomial,
// full double accuracy.
GaussTable make_table() {
    GaussTable t{};
    const int n = kNodes;
    for (int i = 0; i < n; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / pp;
            x -= dx;
            if (std::fabs(dx) < 1e-16) break;
        }
        t.x[i] = x;
        t.w[i] = 2.0 / ((1.0 - x * x) * pp * pp);
    }
    return t;
}

const GaussTable& table() {
    static const GaussTable t = make_table();
    return t;
}

double gauss(const std::function<double(double)>& f, double a, double b) {
    const GaussTable& t = table();
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double sum = 0.0;
    for (int i = 0; i < kNodes; ++i) sum += t.w[i] * f(mid + half * t.x[i]);
    return sum * half;
}

double adapt(const std::function<double(double)>& f, double a, double b, double whole,
             double tol, int depth) {
    const double mid = 0.5 * (a + b);
    const double left = gauss(f, a, mid);
    const double right = gauss(f, mid, b);
    const double split = left + right;
    if (std::fabs(split - whole) <= tol || depth >= 48) return split;
    return adapt(f, a, mid, left, 0.5 * tol, depth + 1)
         + adapt(f, mid, b, right, 0.5 * tol, depth + 1);
}

} // namespace

double integrate(const std::function<double(double)>& f, double a, double b, double tol) {
    if (!(b > a)) return 0.0;
    const double rough = gauss(f, a, b);
    const double eps = tol * (1.0 + std::fabs(rough));
    return adapt(f, a, b, rough, eps, 0);
}

} // namespace quad
} // namespace schwarz
