#include "schwarz/symmetral.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <set>

#include "schwarz/cantor.hpp"
#include "schwarz/errors.hpp"
#include "schwarz/geometry.hpp"
#include "schwarz/poly.hpp"
#include "schwarz/quadrature.hpp"

namespace schwarz {

namespace {

constexpr double kQuadTol = 1e-9;

double sqr(double x) { return x * x; }

const std::array<double, 64>& cos_table() {
    static const std::array<double, 64> t = [] {
        std::array<double, 64> c{};
        for (int m = 0; m < 64; ++m) c[m] = std::cos(2.0 * M_PI * m / 64.0);
        return c;
    }();
    return t;
}

// Lateral density of the symmetral: sqrt(boundary measure^2 + ell'^2).
double symmetral_density(int n, double omega, double ell, double dl) {
    if (ell <= 0.0) return std::fabs(dl);
    if (n == 2) return std::sqrt(4.0 + dl * dl);
    double s = (n - 1) * omega * std::pow(ell / omega, double(n - 2) / double(n - 1));
    return std::sqrt(s * s + dl * dl);
}

} // namespace

TubeSet::TubeSet(Profile profile, BVFunction drift, std::vector<double> direction)
    : profile_(std::move(profile)), drift_(std::move(drift)), e_(std::move(direction)) {
    const size_t want = static_cast<size_t>(profile_.dimension()) - 1;
    if (e_.size() != want)
        throw precondition_error("TubeSet: direction must have n-1 components");
    double norm2 = 0.0;
    for (double v : e_) norm2 += v * v;
    if (std::fabs(std::sqrt(norm2) - 1.0) > 1e-14)
        throw precondition_error("TubeSet: direction must be a unit vector");
}

TubeSet TubeSet::symmetral(Profile profile) {
    double a = profile.z_min(), b = profile.z_max();
    std::vector<double> e(static_cast<size_t>(profile.dimension()) - 1, 0.0);
    e[0] = 1.0;
    return TubeSet(std::move(profile), BVFunction::constant_on(0.0, a, b), std::move(e));
}

double TubeSet::drift_at(double z) const {
    if (z < drift_.z_min()) return 0.0;
    if (z >= drift_.z_max()) return drift_.left_limits().back();
    return drift_.eval(z);
}

double TubeSet::drift_left_limit(double z) const {
    if (z <= drift_.z_min()) return 0.0;
    if (z > drift_.z_max()) return drift_.left_limits().back();
    return drift_.left_limit(z);
}

double TubeSet::drift_right_limit(double z) const {
    if (z < drift_.z_min()) return 0.0;
    if (z >= drift_.z_max()) return drift_.left_limits().back();
    return drift_.right_limit(z);
}

double TubeSet::drift_derivative(double z) const {
    if (z <= drift_.z_min() || z >= drift_.z_max()) return 0.0;
    return drift_.derivative(z);
}

bool TubeSet::contains(const std::vector<double>& x) const {
    if (x.size() != static_cast<size_t>(dimension()))
        throw precondition_error("TubeSet::contains: point has wrong dimension");
    double z = x[0];
    double ell = profile_.eval(z);
    if (ell <= 0.0) return false;
    double r = std::pow(ell / profile_.omega(), 1.0 / (dimension() - 1));
    double g = drift_at(z);
    double d2 = 0.0;
    for (size_t i = 0; i + 1 < x.size(); ++i) {
        double wi = x[i + 1] - g * e_[i];
        d2 += wi * wi;
    }
    return d2 < r * r;
}

double volume(const Profile& profile) { return profile.function().integral(); }
double volume(const TubeSet& tube) { return volume(tube.profile()); }

namespace {

// Measure of {q(c(t)) > 0} within [t0, t1], in the t variable. q >= 0 with
// isolated zeros; only plateau preimages carry positive measure.
double positive_cantor_measure(const CantorPiece& cp, double t0, double t1, double zero_tol) {
    if (poly::max_abs_on(cp.coeffs, 0.0, 1.0) <= zero_tol) return 0.0;
    double measure = t1 - t0;
    for (double u : poly::roots_in(cp.coeffs, 0.0, 1.0, zero_tol)) {
        auto [p0, p1] = cantor_preimage(u);
        if (p0 > p1) continue;
        if (cp.reversed) {
            double q0 = 1.0 - p1, q1 = 1.0 - p0;
            p0 = q0;
            p1 = q1;
        }
        measure -= std::max(0.0, std::min(p1, t1) - std::max(p0, t0));
    }
    return std::max(measure, 0.0);
}

// Lateral contribution of a Cantor profile piece over [a0, b0] (absolute z).
double cantor_lateral(const RadiusProfile& R, size_t i, double a0, double b0) {
    const Profile& p = R.profile();
    const BVFunction& f = p.function();
    const auto& cp = std::get<CantorPiece>(f.pieces()[i]);
    const double a = f.breakpoints()[i], b = f.breakpoints()[i + 1];
    const double h = b - a;
    const double t0 = (a0 - a) / h, t1 = (b0 - a) / h;
    const int n = p.dimension();
    if (n == 2)
        return 2.0 * h * positive_cantor_measure(cp, t0, t1, f.jump_tolerance());
    auto s = R.cantor_radius_poly(i);
    if (!s)
        throw precondition_error(
            "perimeter: Cantor piece has no polynomial radius in this dimension");
    std::vector<double> spow = poly::power(*s, n - 2);
    return (n - 1) * p.omega() * h * cantor_poly_integral(spow, t0, t1, cp.reversed);
}

// Plane-mass limit for a Cantor piece carrying a proportional Cantor drift:
// staircase refinement with doubling depth until totals stabilize.
double cantor_drift_plane_mass(const RadiusProfile& R, size_t i, double lambda, double a0,
                               double b0) {
    const Profile& p = R.profile();
    const BVFunction& f = p.function();
    const auto& cp = std::get<CantorPiece>(f.pieces()[i]);
    auto s = R.cantor_radius_poly(i);
    if (!s)
        throw precondition_error(
            "perimeter: Cantor piece has no polynomial radius in this dimension");
    const double a = f.breakpoints()[i], b = f.breakpoints()[i + 1];
    const double h = b - a;
    const double t0 = (a0 - a) / h, t1 = (b0 - a) / h;
    const int n = p.dimension();

    auto r_at = [&](double t) {
        double u = cantor_function(cp.reversed ? 1.0 - t : t);
        return std::max(0.0, poly::eval(*s, u));
    };

    double prev = 0.0;
    bool have_prev = false;
    for (int depth = 4; depth <= 24; ++depth) {
        const long m = 1L << depth;
        double sum = 0.0;
        double r_prev = r_at(t0);
        for (long j = 1; j <= m; ++j) {
            double t = t0 + (t1 - t0) * (double(j) / double(m));
            double r = r_at(t);
            if (r != r_prev)
                sum += ball_symmetric_difference(n, std::fabs(lambda) * std::fabs(r - r_prev),
                                                 r_prev, r);
            r_prev = r;
        }
        if (have_prev && std::fabs(sum - prev) <= 1e-6 * (1.0 + std::fabs(sum))) return sum;
        prev = sum;
        have_prev = true;
    }
    return prev;
}

} // namespace

PerimeterBreakdown perimeter_symmetral(const Profile& profile, Interval B) {
    if (B.empty()) throw precondition_error("perimeter_symmetral: empty window");
    const BVFunction& f = profile.function();
    const RadiusProfile R(profile);
    const int n = profile.dimension();
    const double omega = profile.omega();

    PerimeterBreakdown out;
    out.window = B;

    for (size_t i = 0; i < f.piece_count(); ++i) {
        auto [a0, b0] = B.clip(f.breakpoints()[i], f.breakpoints()[i + 1]);
        if (a0 >= b0) continue;
        if (const auto* pp = std::get_if<PolyPiece>(&f.pieces()[i])) {
            if (poly::max_abs_on(pp->coeffs, a0, b0) <= f.jump_tolerance()) continue;
            std::vector<double> d = poly::derivative(pp->coeffs);
            auto integrand = [&](double z) {
                return symmetral_density(n, omega, poly::eval(pp->coeffs, z), poly::eval(d, z));
            };
            out.ac_part += quad::integrate(integrand, a0, b0, kQuadTol);
        } else {
            out.ac_part += cantor_lateral(R, i, a0, b0);
        }
    }

    for (size_t i = 0; i < f.breakpoints().size(); ++i) {
        if (!B.contains(f.breakpoints()[i])) continue;
        double h = f.right_limits()[i] - f.left_limits()[i];
        if (std::fabs(h) > f.jump_tolerance()) out.jump_part += std::fabs(h);
    }

    out.cantor_part = f.tv_cantor(B);
    out.total = out.ac_part + out.jump_part + out.cantor_part;
    return out;
}

BoundarySlice boundary_slice(const Profile& profile, double zbar) {
    auto [lo, hi] = profile.approx_limits(zbar);
    RadiusProfile R(profile);
    return {R.from_measure(lo), R.from_measure(hi), hi - lo};
}

PerimeterBreakdown perimeter_tube(const TubeSet& tube, Interval B) {
    if (B.empty()) throw precondition_error("perimeter_tube: empty window");
    const Profile& p = tube.profile();
    const BVFunction& f = p.function();
    const BVFunction& g = tube.drift();
    const RadiusProfile R(p);
    const int n = p.dimension();
    const double omega = p.omega();

    PerimeterBreakdown out;
    out.window = B;

    // Jump planes: wherever the slice radius or the slice center can change.
    std::set<double> candidates(f.breakpoints().begin(), f.breakpoints().end());
    candidates.insert(g.breakpoints().begin(), g.breakpoints().end());
    for (double z : candidates) {
        if (!B.contains(z)) continue;
        double ell_l = f.left_limit(z), ell_r = f.right_limit(z);
        double rl = R.from_measure(ell_l), rr = R.from_measure(ell_r);
        double d = std::fabs(tube.drift_right_limit(z) - tube.drift_left_limit(z));
        if (std::fabs(ell_r - ell_l) <= f.jump_tolerance() && d <= g.jump_tolerance()) continue;
        if (rl == 0.0 && rr == 0.0) continue;
        out.jump_part += ball_symmetric_difference(n, d, rl, rr);
    }

    // Lateral and Cantor parts, per profile piece, split at drift breakpoints.
    for (size_t i = 0; i < f.piece_count(); ++i) {
        auto [a0, b0] = B.clip(f.breakpoints()[i], f.breakpoints()[i + 1]);
        if (a0 >= b0) continue;
        std::vector<double> cuts = {a0};
        {
            const auto& gb = g.breakpoints();
            auto it = std::upper_bound(gb.begin(), gb.end(), a0);
            for (; it != gb.end() && *it < b0; ++it) cuts.push_back(*it);
        }
        cuts.push_back(b0);

        for (size_t c = 0; c + 1 < cuts.size(); ++c) {
            double s0 = cuts[c], s1 = cuts[c + 1];
            if (s1 <= s0) continue;
            double mid = 0.5 * (s0 + s1);

            // The drift on (s0, s1): constant tail, polynomial, or Cantor.
            const CantorPiece* g_cantor = nullptr;
            std::vector<double> g_deriv; // empty => derivative 0
            if (mid > g.z_min() && mid < g.z_max()) {
                int gi = g.piece_index(mid);
                if (const auto* gp = std::get_if<PolyPiece>(&g.pieces()[static_cast<size_t>(gi)])) {
                    g_deriv = poly::derivative(gp->coeffs);
                } else {
                    const auto& gc = std::get<CantorPiece>(g.pieces()[static_cast<size_t>(gi)]);
                    if (poly::total_variation(gc.coeffs, 0.0, 1.0) > g.jump_tolerance())
                        g_cantor = &gc;
                }
            }

            if (const auto* pp = std::get_if<PolyPiece>(&f.pieces()[i])) {
                if (g_cantor)
                    throw precondition_error(
                        "perimeter_tube: Cantor drift over a polynomial profile piece");
                if (poly::max_abs_on(pp->coeffs, s0, s1) <= f.jump_tolerance()) continue;
                std::vector<double> dl = poly::derivative(pp->coeffs);
                bool driftless = g_deriv.empty() || poly::is_zero(poly::trimmed(g_deriv));
                if (driftless) {
                    auto integrand = [&](double z) {
                        return symmetral_density(n, omega, poly::eval(pp->coeffs, z),
                                                 poly::eval(dl, z));
                    };
                    out.ac_part += quad::integrate(integrand, s0, s1, kQuadTol);
                } else if (n == 2) {
                    auto integrand = [&](double z) {
                        double rp = 0.5 * poly::eval(dl, z);
                        double gd = poly::eval(g_deriv, z);
                        return std::sqrt(1.0 + sqr(rp + gd)) + std::sqrt(1.0 + sqr(rp - gd));
                    };
                    out.ac_part += quad::integrate(integrand, s0, s1, kQuadTol);
                } else if (n == 3) {
                    const auto& ct = cos_table();
                    auto integrand = [&](double z) {
                        double ell = std::max(0.0, poly::eval(pp->coeffs, z));
                        double r = std::sqrt(ell / omega);
                        double lp = poly::eval(dl, z) / (2.0 * omega);
                        double gd = poly::eval(g_deriv, z);
                        double sum = 0.0;
                        for (double cth : ct) sum += std::sqrt(r * r + sqr(lp + r * gd * cth));
                        return 2.0 * M_PI * (sum / 64.0);
                    };
                    out.ac_part += quad::integrate(integrand, s0, s1, kQuadTol);
                } else {
                    throw precondition_error(
                        "perimeter_tube: drifted lateral surface unsupported for n >= 4");
                }
            } else {
                const auto& cp = std::get<CantorPiece>(f.pieces()[i]);
                bool g_varies_ac = !g_deriv.empty() && !poly::is_zero(poly::trimmed(g_deriv));
                if (g_varies_ac)
                    throw precondition_error(
                        "perimeter_tube: absolutely continuous drift over a Cantor profile piece");
                out.ac_part += cantor_lateral(R, i, s0, s1);
                if (!g_cantor) {
                    out.cantor_part += f.tv_cantor(Interval::open(s0, s1));
                } else {
                    // Proportional staircases only: g = lambda * r + const on the
                    // piece, same orientation and alignment.
                    if (g_cantor->reversed != cp.reversed)
                        throw precondition_error(
                            "perimeter_tube: drift and radius staircases have opposite "
                            "orientations");
                    int gi = g.piece_index(mid);
                    if (g.breakpoints()[static_cast<size_t>(gi)] != f.breakpoints()[i] ||
                        g.breakpoints()[static_cast<size_t>(gi) + 1] != f.breakpoints()[i + 1])
                        throw precondition_error(
                            "perimeter_tube: drift staircase is not aligned with the profile "
                            "piece");
                    auto s = R.cantor_radius_poly(i);
                    if (!s)
                        throw precondition_error(
                            "perimeter: Cantor piece has no polynomial radius in this dimension");
                    std::vector<double> st = poly::trimmed(*s);
                    std::vector<double> qg = poly::trimmed(g_cantor->coeffs);
                    if (st.size() < 2)
                        throw precondition_error(
                            "perimeter_tube: Cantor drift over a piece with constant radius");
                    if (qg.size() != st.size())
                        throw precondition_error(
                            "perimeter_tube: drift staircase is not proportional to the radius");
                    double lambda = qg.back() / st.back();
                    std::vector<double> resid = poly::add(qg, poly::scale(st, -lambda));
                    std::vector<double> rt = poly::trimmed(resid, 1e-9);
                    if (rt.size() > 1)
                        throw precondition_error(
                            "perimeter_tube: drift staircase is not proportional to the radius");
                    out.cantor_part += cantor_drift_plane_mass(R, i, lambda, s0, s1);
                }
            }
        }
    }

    out.total = out.ac_part + out.jump_part + out.cantor_part;
    return out;
}

InequalityCheck check_inequality(const TubeSet& tube) {
    double pe = perimeter_tube(tube).total;
    double pf = perimeter_symmetral(tube.profile()).total;
    bool holds = pf <= pe + 1e-9 * (1.0 + pf);
    return {pe, pf, holds, pe - pf};
}

} // namespace schwarz
