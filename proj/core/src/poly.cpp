#include "schwarz/poly.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace schwarz {
namespace poly {

double eval(const std::vector<double>& c, double x) {
    double v = 0.0;
    for (size_t i = c.size(); i-- > 0;) v = v * x + c[i];
    return v;
}

std::vector<double> derivative(const std::vector<double>& c) {
    if (c.size() <= 1) return {};
    std::vector<double> d(c.size() - 1);
    for (size_t i = 1; i < c.size(); ++i) d[i - 1] = c[i] * static_cast<double>(i);
    return d;
}

std::vector<double> antiderivative(const std::vector<double>& c) {
    std::vector<double> a(c.size() + 1, 0.0);
    for (size_t i = 0; i < c.size(); ++i) a[i + 1] = c[i] / static_cast<double>(i + 1);
    return a;
}

double integral(const std::vector<double>& c, double a, double b) {
    std::vector<double> F = antiderivative(c);
    return eval(F, b) - eval(F, a);
}

std::vector<double> trimmed(const std::vector<double>& c, double rel_tol) {
    double scale = 0.0;
    for (double v : c) scale = std::max(scale, std::fabs(v));
    std::vector<double> out = c;
    while (!out.empty() && std::fabs(out.back()) <= rel_tol * scale) out.pop_back();
    return out;
}

int degree(const std::vector<double>& c) {
    std::vector<double> t = trimmed(c);
    return t.empty() ? -1 : static_cast<int>(t.size()) - 1;
}

bool is_zero(const std::vector<double>& c, double abs_tol) {
    for (double v : c)
        if (std::fabs(v) > abs_tol) return false;
    return true;
}

std::vector<double> add(const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> out(std::max(a.size(), b.size()), 0.0);
    for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return out;
}

std::vector<double> scale(const std::vector<double>& a, double s) {
    std::vector<double> out = a;
    for (double& v : out) v *= s;
    return out;
}

std::vector<double> multiply(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<double> out(a.size() + b.size() - 1, 0.0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

std::vector<double> power(const std::vector<double>& a, int k) {
    std::vector<double> out = {1.0};
    for (int i = 0; i < k; ++i) out = multiply(out, a);
    return out;
}

std::vector<double> compose_affine(const std::vector<double>& c, double alpha, double beta) {
    // Horner in the substituted variable.
    std::vector<double> out;
    for (size_t i = c.size(); i-- > 0;) {
        out = multiply(out, {alpha, beta});
        if (out.empty()) out = {0.0};
        out[0] += c[i];
    }
    return out;
}

namespace {

double bisect_root(const std::vector<double>& c, double lo, double hi) {
    double flo = eval(c, lo);
    if (flo == 0.0) return lo;
    for (int i = 0; i < 120; ++i) {
        double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        double fm = eval(c, mid);
        if (fm == 0.0) return mid;
        if ((flo < 0.0) == (fm < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace

std::vector<double> roots_in(const std::vector<double>& c, double a, double b,
                             double touch_tol) {
    std::vector<double> p = trimmed(c);
    std::vector<double> roots;
    if (p.empty() || a > b) return roots;
    if (p.size() == 1) return roots;
    if (p.size() == 2) {
        double r = -p[0] / p[1];
        if (r >= a && r <= b) roots.push_back(r);
        return roots;
    }
    std::vector<double> crit = roots_in(derivative(p), a, b, 0.0);
    std::vector<double> nodes;
    nodes.push_back(a);
    for (double r : crit)
        if (r > nodes.back()) nodes.push_back(r);
    if (b > nodes.back()) nodes.push_back(b);

    auto push = [&roots](double r) {
        if (roots.empty() || std::fabs(r - roots.back()) > 1e-13 * (1.0 + std::fabs(r)))
            roots.push_back(r);
    };
    for (size_t i = 0; i + 1 < nodes.size(); ++i) {
        double lo = nodes[i], hi = nodes[i + 1];
        double flo = eval(p, lo), fhi = eval(p, hi);
        if (flo == 0.0) push(lo);
        if ((flo < 0.0) != (fhi < 0.0) && flo != 0.0 && fhi != 0.0)
            push(bisect_root(p, lo, hi));
        if (fhi == 0.0 && i + 2 == nodes.size()) push(hi);
    }
    if (touch_tol > 0.0) {
        // Even-multiplicity zeros sit at critical points without a sign change.
        for (double x : crit)
            if (std::fabs(eval(p, x)) <= touch_tol) push(x);
        std::sort(roots.begin(), roots.end());
    }
    return roots;
}

double total_variation(const std::vector<double>& c, double a, double b) {
    if (b <= a) return 0.0;
    std::vector<double> p = trimmed(c);
    if (static_cast<int>(p.size()) <= 1) return 0.0;
    std::vector<double> crit = roots_in(derivative(p), a, b, 0.0);
    double tv = 0.0;
    double prev_x = a;
    double prev_v = eval(p, a);
    for (double x : crit) {
        if (x <= prev_x || x >= b) continue;
        double v = eval(p, x);
        tv += std::fabs(v - prev_v);
        prev_x = x;
        prev_v = v;
    }
    tv += std::fabs(eval(p, b) - prev_v);
    return tv;
}

double min_on(const std::vector<double>& c, double a, double b) {
    double m = std::min(eval(c, a), eval(c, b));
    for (double x : roots_in(derivative(c), a, b, 0.0)) m = std::min(m, eval(c, x));
    return m;
}

double max_abs_on(const std::vector<double>& c, double a, double b) {
    double m = std::max(std::fabs(eval(c, a)), std::fabs(eval(c, b)));
    for (double x : roots_in(derivative(c), a, b, 0.0)) m = std::max(m, std::fabs(eval(c, x)));
    return m;
}

std::optional<std::vector<double>> kth_root(const std::vector<double>& p_in, int k,
                                            double rel_tol) {
    std::vector<double> p = trimmed(p_in);
    if (k < 1) return std::nullopt;
    if (k == 1) return p;
    if (p.empty()) return std::vector<double>{};
    int dp = static_cast<int>(p.size()) - 1;
    if (dp % k != 0) return std::nullopt;
    int ds = dp / k;
    if (p.back() <= 0.0) return std::nullopt;

    std::vector<double> s(ds + 1, 0.0);
    s[ds] = std::pow(p.back(), 1.0 / k);
    const double lead_pow = k * std::pow(s[ds], k - 1);
    for (int j = 1; j <= ds; ++j) {
        // Match the coefficient of degree dp - j; it depends linearly on s[ds-j].
        std::vector<double> cur = power(s, k);
        double have = (dp - j < static_cast<int>(cur.size())) ? cur[dp - j] : 0.0;
        s[ds - j] = (p[dp - j] - have) / lead_pow;
    }
    std::vector<double> check = power(s, k);
    double scale = 0.0;
    for (double v : p) scale = std::max(scale, std::fabs(v));
    for (int i = 0; i <= dp; ++i) {
        double want = p[i];
        double got = (i < static_cast<int>(check.size())) ? check[i] : 0.0;
        if (std::fabs(want - got) > rel_tol * (1.0 + scale)) return std::nullopt;
    }
    return s;
}

} // namespace poly
} // namespace schwarz
