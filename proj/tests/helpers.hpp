#pragma once

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "schwarz/bv_function.hpp"
#include "schwarz/geometry.hpp"
#include "schwarz/oracle.hpp"
#include "schwarz/poly.hpp"
#include "schwarz/profile.hpp"
#include "schwarz/symmetral.hpp"

namespace golden {

using namespace schwarz;

// pi (1 - z^2) on [-1,1], n = 3: the unit ball.
inline Profile ball() {
    return Profile(BVFunction::polynomial_on({M_PI, 0.0, -M_PI}, -1.0, 1.0), 3);
}

// pi on [0,2], n = 3: cylinder of radius 1, height 2.
inline Profile cylinder() {
    return Profile(BVFunction::constant_on(M_PI, 0.0, 2.0), 3);
}

// 4*pi on [0,1), pi on [1,2], n = 3.
inline Profile step() {
    return Profile(BVFunction::piecewise_constant({0.0, 1.0, 2.0}, {4.0 * M_PI, M_PI}), 3);
}

// 1 on [0,1], n = 2: the unit square.
inline Profile square() {
    return Profile(BVFunction::constant_on(1.0, 0.0, 1.0), 2);
}

// pi (1 + c(z))^2 on [0,1], n = 3: radius 1 + c(z).
inline Profile cantor() {
    return Profile(BVFunction({0.0, 1.0}, {CantorPiece{{M_PI, 2.0 * M_PI, M_PI}, false}}), 3);
}

// pi on [0,1] and [2,3], vanishing between, n = 3.
inline Profile two_component() {
    return Profile(
        BVFunction::piecewise_constant({0.0, 1.0, 2.0, 3.0}, {M_PI, 0.0, M_PI}), 3);
}

} // namespace golden

namespace testutil {

using namespace schwarz;

// Refinement-supremum estimate of the total variation over (a, b) from
// pointwise evaluation only. Partition points cluster geometrically toward
// breakpoints and toward finite (open) window endpoints, so one-sided limits
// are resolved to the last representable point; in between, a uniform mesh of
// 2^-depth of the range (2^-12 on Cantor pieces, where monotone staircase
// sums telescope at any mesh).
inline double refinement_tv(const BVFunction& f, double a, double b, int depth = 20) {
    const double margin = 0.25 * (f.z_max() - f.z_min()) + 0.5;
    const bool open_lo = std::isfinite(a), open_hi = std::isfinite(b);
    double lo = open_lo ? a : f.z_min() - margin;
    double hi = open_hi ? b : f.z_max() + margin;
    if (hi <= lo) return 0.0;
    const double span = hi - lo;

    std::set<double> anchors;
    auto cluster = [&](double center, int dir) {
        for (int j = 4; j <= 60; ++j) {
            double off = span * std::ldexp(1.0, -j);
            if (dir <= 0 && center - off > lo && center - off < hi) anchors.insert(center - off);
            if (dir >= 0 && center + off > lo && center + off < hi) anchors.insert(center + off);
        }
    };
    if (open_lo) cluster(lo, +1);
    else anchors.insert(lo);
    if (open_hi) cluster(hi, -1);
    else anchors.insert(hi);
    for (double z : f.breakpoints())
        if (z > lo && z < hi) {
            anchors.insert(z);
            cluster(z, 0);
        }
    if (anchors.size() < 2) return 0.0;

    double tv = 0.0;
    auto it = anchors.begin();
    double prev_z = *it++;
    double prev_v = f.eval(prev_z);
    for (; it != anchors.end(); ++it) {
        double g0 = prev_z, g1 = *it;
        int pi = f.piece_index(0.5 * (g0 + g1));
        bool is_cantor =
            pi >= 0 && std::holds_alternative<CantorPiece>(f.pieces()[static_cast<size_t>(pi)]);
        double mesh = span * std::ldexp(1.0, -(is_cantor ? std::min(depth, 12) : depth));
        long cells = std::max(1L, std::min(1L << 22, static_cast<long>((g1 - g0) / mesh) + 1));
        for (long j = 1; j <= cells; ++j) {
            double z = (j == cells) ? g1 : g0 + (g1 - g0) * (double(j) / double(cells));
            double v = f.eval(z);
            tv += std::fabs(v - prev_v);
            prev_v = v;
        }
        prev_z = g1;
    }
    return tv;
}

// Left/right Riemann bracket of the integral of a piecewise MONOTONE
// function, pointwise evaluation only.
inline std::pair<double, double> monotone_integral_bracket(const BVFunction& f, int depth = 22) {
    double lo = f.z_min(), hi = f.z_max();
    long cells = 1L << depth;
    double sum_left = 0.0, sum_right = 0.0;
    double h = (hi - lo) / double(cells);
    double prev = f.eval(lo);
    for (long j = 1; j <= cells; ++j) {
        // One-sided value from inside at the far support edge.
        double v = (j == cells) ? f.left_limit(hi) : f.eval(lo + h * double(j));
        sum_left += prev;
        sum_right += v;
        prev = v;
    }
    return {h * std::min(sum_left, sum_right), h * std::max(sum_left, sum_right)};
}

// Deterministic pseudo-random battery builder.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    double u() { return rng_.uniform(ctr_++); }
    double u(double lo, double hi) { return lo + (hi - lo) * u(); }
    int pick(int n) { return static_cast<int>(u() * n) % n; }

    // Continuous, strictly positive piecewise profile; optionally with Cantor
    // pieces whose radius is affine in the staircase variable.
    Profile continuous_profile(int n, bool allow_cantor) {
        double a = u(-2.0, 1.0);
        int pieces = 1 + pick(3);
        std::vector<double> bks = {a};
        std::vector<Piece> ps;
        double omega = unit_ball_volume(n - 1);
        double r_prev = u(0.4, 1.4);
        for (int i = 0; i < pieces; ++i) {
            double len = u(0.4, 1.2);
            bks.push_back(bks.back() + len);
            int kind = allow_cantor ? pick(3) : pick(2);
            double r_next = u(0.4, 1.4);
            double l_prev = omega * std::pow(r_prev, n - 1);
            double l_next = omega * std::pow(r_next, n - 1);
            if (kind == 0) {
                // Linear in the slice measure between the endpoint values.
                double z0 = bks[bks.size() - 2], z1 = bks.back();
                double slope = (l_next - l_prev) / (z1 - z0);
                ps.push_back(PolyPiece{{l_prev - slope * z0, slope}});
                r_prev = r_next;
            } else if (kind == 1) {
                ps.push_back(PolyPiece{{l_prev}}); // constant, keeps the radius
            } else {
                double amp = u(0.2, 0.8) * (u() < 0.5 ? -1.0 : 1.0);
                if (r_prev + std::min(0.0, amp) < 0.1) amp = std::fabs(amp);
                ps.push_back(CantorPiece{poly::scale(poly::power({r_prev, amp}, n - 1), omega),
                                         false});
                r_prev = r_prev + amp;
            }
        }
        return Profile(BVFunction(std::move(bks), std::move(ps)), n);
    }

    // Continuous profile made of polynomial pieces only.
    Profile smooth_profile(int n) {
        Profile p = continuous_profile(n, false);
        if (u() < 0.4) {
            // Replace by a single positive arch with polynomial decay.
            double a = u(-2.0, 0.0), len = u(1.0, 3.0);
            double m = a + 0.5 * len, peak = u(1.0, 4.0), base = u(0.05, 0.4);
            double alpha = -(peak - base) / ((0.5 * len) * (0.5 * len));
            std::vector<double> arch =
                poly::add(poly::scale(poly::multiply({-m, 1.0}, {-m, 1.0}), alpha), {peak});
            return Profile(BVFunction({a, a + len}, {PolyPiece{arch}}), n);
        }
        return p;
    }

    // General profile: may carry interior jumps, gaps and Cantor pieces.
    Profile rough_profile(int n) {
        double a = u(-2.0, 1.0);
        int pieces = 1 + pick(4);
        std::vector<double> bks = {a};
        std::vector<Piece> ps;
        double omega = unit_ball_volume(n - 1);
        for (int i = 0; i < pieces; ++i) {
            bks.push_back(bks.back() + u(0.3, 1.1));
            int kind = pick(5);
            double z0 = bks[bks.size() - 2], z1 = bks.back();
            if (kind == 0 && i > 0 && i + 1 < pieces) {
                ps.push_back(PolyPiece{{0.0}}); // gap
            } else if (kind <= 1) {
                ps.push_back(PolyPiece{{u(0.3, 4.0)}});
            } else if (kind == 2) {
                double v0 = u(0.3, 3.0), v1 = u(0.3, 3.0);
                double slope = (v1 - v0) / (z1 - z0);
                ps.push_back(PolyPiece{{v0 - slope * z0, slope}});
            } else if (kind == 3) {
                double peak = u(0.5, 3.0), m = 0.5 * (z0 + z1);
                double alpha = -peak / ((z1 - m) * (z1 - m));
                ps.push_back(PolyPiece{
                    poly::add(poly::scale(poly::multiply({-m, 1.0}, {-m, 1.0}), alpha),
                              {peak + u(0.05, 0.3)})});
            } else {
                double r0 = u(0.4, 1.2), amp = u(0.2, 0.8);
                ps.push_back(
                    CantorPiece{poly::scale(poly::power({r0, amp}, n - 1), omega), u() < 0.5});
            }
        }
        return Profile(BVFunction(std::move(bks), std::move(ps)), n);
    }

    // Drift aligned with the profile pieces: constant on Cantor pieces,
    // constant or linear on polynomial pieces (jumps allowed at breakpoints).
    BVFunction aligned_drift(const Profile& p, double scale) {
        const BVFunction& f = p.function();
        std::vector<Piece> ps;
        double g_prev = u(-scale, scale);
        for (size_t i = 0; i < f.piece_count(); ++i) {
            bool cantor = std::holds_alternative<CantorPiece>(f.pieces()[i]);
            int kind = cantor ? 0 : pick(3);
            double z0 = f.breakpoints()[i], z1 = f.breakpoints()[i + 1];
            if (kind == 0) {
                double v = (u() < 0.3) ? g_prev : u(-scale, scale);
                ps.push_back(PolyPiece{{v}});
                g_prev = v;
            } else {
                double v0 = (kind == 1) ? g_prev : u(-scale, scale);
                double v1 = u(-scale, scale);
                double slope = (v1 - v0) / (z1 - z0);
                ps.push_back(PolyPiece{{v0 - slope * z0, slope}});
                g_prev = v1;
            }
        }
        return BVFunction(f.breakpoints(), std::move(ps));
    }

    std::vector<double> direction(int n) {
        std::vector<double> e(static_cast<size_t>(n) - 1, 0.0);
        double norm = 0.0;
        for (double& v : e) {
            v = u(-1.0, 1.0);
            norm += v * v;
        }
        norm = std::sqrt(norm);
        if (norm < 1e-6) {
            e.assign(e.size(), 0.0);
            e[0] = 1.0;
            return e;
        }
        for (double& v : e) v /= norm;
        return e;
    }

private:
    oracle::CounterRng rng_;
    std::uint64_t ctr_ = 0;
};

} // namespace testutil
