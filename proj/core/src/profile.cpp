#include "schwarz/profile.hpp"

#include <algorithm>
#include <cmath>

#include "schwarz/cantor.hpp"
#include "schwarz/errors.hpp"
#include "schwarz/geometry.hpp"
#include "schwarz/poly.hpp"

namespace schwarz {

namespace {

// Nonnegativity check: closed-form minima on polynomial pieces (via critical
// points) and on Cantor pieces (in the Cantor variable), plus side limits.
void validate_nonnegative(const BVFunction& f) {
    const double tol = -1e-9 * (1.0 + f.max_abs());
    for (size_t i = 0; i < f.piece_count(); ++i) {
        const Piece& piece = f.pieces()[i];
        double lo;
        if (const auto* pp = std::get_if<PolyPiece>(&piece))
            lo = poly::min_on(pp->coeffs, f.breakpoints()[i], f.breakpoints()[i + 1]);
        else
            lo = poly::min_on(std::get<CantorPiece>(piece).coeffs, 0.0, 1.0);
        if (lo < tol) throw precondition_error("Profile: function must be nonnegative");
    }
}

} // namespace

Profile::Profile(BVFunction f, int dimension) : f_(std::move(f)), n_(dimension) {
    if (n_ < 2) throw precondition_error("Profile: dimension must be >= 2");
    validate_nonnegative(f_);
    omega_ = unit_ball_volume(n_ - 1);
}

RadiusProfile::RadiusProfile(Profile p) : profile_(std::move(p)) {
    omega_ = profile_.omega();
}

double RadiusProfile::from_measure(double ell) const {
    if (ell <= 0.0) return 0.0;
    return std::pow(ell / omega_, 1.0 / (profile_.dimension() - 1));
}

double RadiusProfile::operator()(double z) const { return from_measure(profile_.eval(z)); }

double RadiusProfile::derivative(double z) const {
    const int n = profile_.dimension();
    double ell = profile_.eval(z);
    if (ell <= 0.0) return 0.0;
    double dl = profile_.function().derivative(z);
    if (dl == 0.0) return 0.0;
    double r = from_measure(ell);
    return dl / ((n - 1) * omega_ * std::pow(r, n - 2));
}

std::pair<double, double> RadiusProfile::limits(double z) const {
    auto [lo, hi] = profile_.approx_limits(z);
    return {from_measure(lo), from_measure(hi)};
}

std::optional<std::vector<double>> RadiusProfile::cantor_radius_poly(size_t piece_index) const {
    const auto* cp = std::get_if<CantorPiece>(&profile_.function().pieces()[piece_index]);
    if (!cp) return std::nullopt;
    std::vector<double> scaled = poly::scale(cp->coeffs, 1.0 / omega_);
    if (poly::is_zero(poly::trimmed(scaled))) return std::vector<double>{0.0};
    auto root = poly::kth_root(scaled, profile_.dimension() - 1);
    if (!root) return std::nullopt;
    if (poly::min_on(*root, 0.0, 1.0) < -1e-12 * (1.0 + poly::max_abs_on(*root, 0.0, 1.0)))
        return std::nullopt;
    return root;
}

RadiusProfile radius_profile(const Profile& p) { return RadiusProfile(p); }

std::vector<Interval> positivity_intervals(const Profile& p) {
    const BVFunction& f = p.function();
    const double zero_tol = 1e-12 * (1.0 + f.max_abs());

    // Closed blocker intervals where the lower approximate limit vanishes.
    std::vector<std::pair<double, double>> blockers;
    const auto& bks = f.breakpoints();
    for (size_t i = 0; i < bks.size(); ++i) {
        double lo = std::min(f.left_limits()[i], f.right_limits()[i]);
        if (lo <= zero_tol) blockers.push_back({bks[i], bks[i]});
    }
    for (size_t i = 0; i < f.piece_count(); ++i) {
        double a = bks[i], b = bks[i + 1];
        if (const auto* pp = std::get_if<PolyPiece>(&f.pieces()[i])) {
            if (poly::max_abs_on(pp->coeffs, a, b) <= zero_tol) {
                blockers.push_back({a, b});
                continue;
            }
            for (double r : poly::roots_in(pp->coeffs, a, b, zero_tol))
                if (r > a && r < b) blockers.push_back({r, r});
        } else {
            const auto& cp = std::get<CantorPiece>(f.pieces()[i]);
            if (poly::max_abs_on(cp.coeffs, 0.0, 1.0) <= zero_tol) {
                blockers.push_back({a, b});
                continue;
            }
            for (double u : poly::roots_in(cp.coeffs, 0.0, 1.0, zero_tol)) {
                auto [t0, t1] = cantor_preimage(u);
                if (t0 > t1) continue;
                if (cp.reversed) {
                    double s0 = 1.0 - t1, s1 = 1.0 - t0;
                    t0 = s0;
                    t1 = s1;
                }
                blockers.push_back({a + t0 * (b - a), a + t1 * (b - a)});
            }
        }
    }
    std::sort(blockers.begin(), blockers.end());

    std::vector<Interval> out;
    double cursor = f.z_min();
    auto emit = [&](double from, double to) {
        if (to > from) out.push_back(Interval::open(from, to));
    };
    for (const auto& [blo, bhi] : blockers) {
        emit(cursor, blo);
        cursor = std::max(cursor, bhi);
    }
    emit(cursor, f.z_max());
    return out;
}

bool is_sobolev(const Profile& p, Interval B) {
    if (B.empty()) return true;
    return p.function().tv_jump(B) == 0.0 && p.function().tv_cantor(B) == 0.0;
}

Profile cantor_radius_profile(double r0, double r1, double a, double b, int dimension,
                              bool reversed) {
    double omega = unit_ball_volume(dimension - 1);
    std::vector<double> q = poly::scale(poly::power({r0, r1}, dimension - 1), omega);
    return Profile(BVFunction({a, b}, {CantorPiece{std::move(q), reversed}}), dimension);
}

} // namespace schwarz
