#include "schwarz/cantor.hpp"

#include <cmath>
#include <stdexcept>

namespace schwarz {

namespace {
constexpr int kMaxDigits = 64;
constexpr double kDigitTol = 1e-16;
} // namespace

double cantor_function(double t) {
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    double acc = 0.0;
    double w = 0.5;
    for (int i = 0; i < kMaxDigits && w > kDigitTol; ++i) {
        if (t >= 2.0 / 3.0) {
            acc += w;
            t = 3.0 * t - 2.0;
        } else if (t > 1.0 / 3.0) {
            return acc + w; // middle-third plateau, exact
        } else {
            t *= 3.0;
        }
        w *= 0.5;
    }
    return acc + w; // remaining interval below resolution
}

std::vector<double> cantor_moments(int max_k) {
    // Splitting [0,1] into thirds and using c(x/3) = c(x)/2, c(1-x) = 1-c(x):
    //   m_k (1 - 3^-1 2^-k - 3^-1 (-2)^-k)
    //     = 3^-1 2^-k + 3^-1 sum_{j<k} C(k,j) (-2)^-j m_j.
    std::vector<double> m(static_cast<size_t>(max_k) + 1);
    m[0] = 1.0;
    std::vector<std::vector<double>> binom(max_k + 1);
    for (int k = 0; k <= max_k; ++k) {
        binom[k].assign(k + 1, 1.0);
        for (int j = 1; j < k; ++j) binom[k][j] = binom[k - 1][j - 1] + binom[k - 1][j];
    }
    for (int k = 1; k <= max_k; ++k) {
        const double p2k = std::ldexp(1.0, -k); // 2^-k
        double rhs = p2k / 3.0;
        double sign = 1.0;
        for (int j = 0; j < k; ++j) {
            rhs += (binom[k][j] * sign * std::ldexp(1.0, -j) * m[j]) / 3.0;
            sign = -sign;
        }
        const double neg2k = (k % 2 == 0) ? p2k : -p2k;
        const double lhs_coeff = 1.0 - p2k / 3.0 - neg2k / 3.0;
        m[k] = rhs / lhs_coeff;
    }
    return m;
}

namespace {

// Recursive descent over the ternary structure; depth-limited like eval.
std::vector<double> prefix_moments_impl(int max_k, double T, const std::vector<double>& full,
                                        const std::vector<std::vector<double>>& binom, int depth) {
    std::vector<double> M(static_cast<size_t>(max_k) + 1, 0.0);
    if (T <= 0.0) return M;
    if (T >= 1.0 || depth > kMaxDigits) {
        if (T >= 1.0) return full;
        // Unresolved tail: the remaining interval is < 3^-64 wide.
        return M;
    }
    if (T <= 1.0 / 3.0) {
        std::vector<double> inner = prefix_moments_impl(max_k, 3.0 * T, full, binom, depth + 1);
        for (int k = 0; k <= max_k; ++k) M[k] = inner[k] * std::ldexp(1.0, -k) / 3.0;
        return M;
    }
    if (T <= 2.0 / 3.0) {
        for (int k = 0; k <= max_k; ++k)
            M[k] = full[k] * std::ldexp(1.0, -k) / 3.0 + (T - 1.0 / 3.0) * std::ldexp(1.0, -k);
        return M;
    }
    // T in the last third: c((2+v)/3) = (1 + c(v)) / 2.
    std::vector<double> inner = prefix_moments_impl(max_k, 3.0 * T - 2.0, full, binom, depth + 1);
    for (int k = 0; k <= max_k; ++k) {
        double part = full[k] * std::ldexp(1.0, -k) / 3.0 + std::ldexp(1.0, -k) / 3.0; // M_k(2/3)
        double sum = 0.0;
        for (int j = 0; j <= k; ++j) sum += binom[k][j] * inner[j];
        M[k] = part + sum * std::ldexp(1.0, -k) / 3.0;
    }
    return M;
}

} // namespace

std::vector<double> cantor_prefix_moments(int max_k, double T) {
    std::vector<double> full = cantor_moments(max_k);
    std::vector<std::vector<double>> binom(max_k + 1);
    for (int k = 0; k <= max_k; ++k) {
        binom[k].assign(k + 1, 1.0);
        for (int j = 1; j < k; ++j) binom[k][j] = binom[k - 1][j - 1] + binom[k - 1][j];
    }
    return prefix_moments_impl(max_k, T, full, binom, 0);
}

double cantor_poly_integral(const std::vector<double>& coeffs, double t0, double t1,
                            bool reversed) {
    if (coeffs.empty() || t1 <= t0) return 0.0;
    if (reversed) {
        // q(c(1-t)) over [t0,t1] equals q(c(s)) over [1-t1, 1-t0].
        return cantor_poly_integral(coeffs, 1.0 - t1, 1.0 - t0, false);
    }
    const int max_k = static_cast<int>(coeffs.size()) - 1;
    std::vector<double> M1 = cantor_prefix_moments(max_k, t1);
    std::vector<double> M0 = cantor_prefix_moments(max_k, t0);
    double sum = 0.0;
    for (int k = max_k; k >= 0; --k) sum += coeffs[k] * (M1[k] - M0[k]);
    return sum;
}

std::pair<double, double> cantor_preimage(double u) {
    if (u < 0.0 || u > 1.0) return {1.0, 0.0};
    if (u == 0.0) return {0.0, 0.0};
    if (u == 1.0) return {1.0, 1.0};
    double lo = 0.0;
    double scale = 1.0; // width of the current ternary cell
    for (int i = 0; i < kMaxDigits; ++i) {
        if (u == 0.5) {
            // Value attained on the middle third of the current cell.
            return {lo + scale / 3.0, lo + 2.0 * scale / 3.0};
        }
        if (u < 0.5) {
            u *= 2.0;
            scale /= 3.0;
        } else {
            u = 2.0 * u - 1.0;
            lo += 2.0 * scale / 3.0;
            scale /= 3.0;
        }
        if (u == 0.0) return {lo, lo};
        if (u == 1.0) return {lo + scale, lo + scale};
    }
    return {lo + scale / 2.0, lo + scale / 2.0};
}

} // namespace schwarz
