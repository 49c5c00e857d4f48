#include "schwarz/counterexamples.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "schwarz/errors.hpp"
#include "schwarz/poly.hpp"

namespace schwarz {

namespace {

std::vector<double> default_direction(int n) {
    std::vector<double> e(static_cast<size_t>(n) - 1, 0.0);
    e[0] = 1.0;
    return e;
}

double norm(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

std::vector<double> normalized(const std::vector<double>& v) {
    double m = norm(v);
    std::vector<double> e = v;
    for (double& x : e) x /= m;
    return e;
}

// Right-clamped constant drift |tau| on [zbar, inf), as a BV function.
BVFunction step_drift(const Profile& profile, double zbar, double magnitude) {
    double hi = std::max(profile.z_max(), zbar + 1.0);
    if (hi <= zbar) hi = zbar + 1.0;
    return BVFunction::constant_on(magnitude, zbar, hi);
}

} // namespace

WitnessSet split_witness(const Profile& profile, double zbar, std::vector<double> tau) {
    if (tau.size() != static_cast<size_t>(profile.dimension()) - 1)
        throw precondition_error("split_witness: tau must have n-1 components");
    double mag = norm(tau);
    if (mag == 0.0) throw precondition_error("split_witness: tau must be nonzero");
    auto [lo, hi] = profile.approx_limits(zbar);
    if (lo > profile.function().jump_tolerance())
        throw precondition_error("split_witness: lower approximate limit is positive at zbar");
    bool mass_left = false, mass_right = false;
    for (const Interval& J : positivity_intervals(profile)) {
        if (J.lo < zbar) mass_left = true;
        if (J.hi > zbar) mass_right = true;
    }
    if (!mass_left || !mass_right)
        throw precondition_error("split_witness: positivity set must have mass on both sides");

    TubeSet tube(profile, step_drift(profile, zbar, mag), normalized(tau));
    WitnessProvenance prov;
    prov.zbar = zbar;
    prov.tau = std::move(tau);
    prov.direction = tube.direction();
    return {std::move(tube), WitnessKind::Split, std::move(prov)};
}

WitnessSet jump_witness(const Profile& profile, double zbar, std::vector<double> tau) {
    if (tau.size() != static_cast<size_t>(profile.dimension()) - 1)
        throw precondition_error("jump_witness: tau must have n-1 components");
    const BVFunction& f = profile.function();
    double l = f.left_limit(zbar), r = f.right_limit(zbar);
    if (std::fabs(r - l) <= f.jump_tolerance())
        throw precondition_error("jump_witness: profile has no jump at zbar");
    BoundarySlice slice = boundary_slice(profile, zbar);
    double gap = slice.r_upper - slice.r_lower;
    double mag = norm(tau);
    if (!(mag > 0.0 && mag < gap))
        throw precondition_error("jump_witness: |tau| must lie in (0, r_upper - r_lower)");

    TubeSet tube(profile, step_drift(profile, zbar, mag), normalized(tau));
    WitnessProvenance prov;
    prov.zbar = zbar;
    prov.tau = std::move(tau);
    prov.direction = tube.direction();
    return {std::move(tube), WitnessKind::Jump, std::move(prov)};
}

WitnessSet cantor_witness(const Profile& profile, double lambda, std::vector<double> direction,
                          std::optional<size_t> atom_index) {
    if (!(lambda > 0.0 && lambda < 1.0))
        throw precondition_error("cantor_witness: lambda must lie in (0,1)");
    const BVFunction& f = profile.function();
    if (direction.empty()) direction = default_direction(profile.dimension());
    if (direction.size() != static_cast<size_t>(profile.dimension()) - 1)
        throw precondition_error("cantor_witness: direction must have n-1 components");
    direction = normalized(direction);

    std::vector<CantorAtom> atoms = f.cantor_atoms();
    if (atoms.empty()) throw precondition_error("cantor_witness: profile has no Cantor part");
    std::vector<Interval> components = positivity_intervals(profile);
    auto eligible = [&](const CantorAtom& atom) {
        for (const Interval& J : components)
            if (J.lo <= atom.lo && atom.hi <= J.hi) return true;
        return false;
    };

    const CantorAtom* chosen = nullptr;
    if (atom_index) {
        if (*atom_index >= atoms.size())
            throw precondition_error("cantor_witness: atom index out of range");
        chosen = &atoms[*atom_index];
        if (!eligible(*chosen))
            throw precondition_error("cantor_witness: profile vanishes inside the Cantor piece");
    } else {
        for (const CantorAtom& atom : atoms)
            if (eligible(atom)) {
                chosen = &atom;
                break;
            }
        if (!chosen)
            throw precondition_error("cantor_witness: no Cantor piece with positive profile");
    }

    // Locate the piece and its radius polynomial.
    RadiusProfile R(profile);
    size_t piece = f.piece_count();
    for (size_t i = 0; i < f.piece_count(); ++i)
        if (f.breakpoints()[i] == chosen->lo && f.breakpoints()[i + 1] == chosen->hi &&
            std::holds_alternative<CantorPiece>(f.pieces()[i])) {
            piece = i;
            break;
        }
    if (piece == f.piece_count())
        throw precondition_error("cantor_witness: Cantor atom does not match a piece");
    auto s = R.cantor_radius_poly(piece);
    if (!s)
        throw precondition_error(
            "cantor_witness: Cantor piece has no polynomial radius in this dimension");
    const auto& cp = std::get<CantorPiece>(f.pieces()[piece]);

    // g = lambda * (r(z) - r at the left edge) across the piece, constant after.
    double u_left = cp.reversed ? 1.0 : 0.0;
    double u_right = cp.reversed ? 0.0 : 1.0;
    double r_left = poly::eval(*s, u_left);
    double r_right = poly::eval(*s, u_right);
    std::vector<double> qg = poly::scale(*s, lambda);
    qg[0] -= lambda * r_left;

    std::vector<double> bks = {chosen->lo, chosen->hi};
    std::vector<Piece> pieces = {CantorPiece{std::move(qg), cp.reversed}};
    if (profile.z_max() > chosen->hi) {
        bks.push_back(profile.z_max());
        pieces.push_back(PolyPiece{{lambda * (r_right - r_left)}});
    }
    TubeSet tube(profile, BVFunction(std::move(bks), std::move(pieces)), direction);
    WitnessProvenance prov;
    prov.lambda = lambda;
    prov.direction = direction;
    return {std::move(tube), WitnessKind::Cantor, std::move(prov)};
}

std::vector<double> refinement_partition(const Profile& profile, int k) {
    if (k < 1) throw precondition_error("refinement_partition: depth must be >= 1");
    const BVFunction& f = profile.function();
    for (const JumpAtom& atom : f.jump_atoms())
        if (atom.z > f.z_min() && atom.z < f.z_max())
            throw precondition_error("discretize_profile: jump atom inside the support");

    const double a = f.z_min(), b = f.z_max(), span = b - a;
    std::set<double> pts(f.breakpoints().begin(), f.breakpoints().end());
    // Dyadic mesh span/2^k at depth 1, span/2^{k+1} afterwards (still within
    // the mesh bound); partitions stay nested across k.
    const int level = (k == 1) ? 1 : k + 1;
    const long cells = 1L << level;
    for (long j = 1; j < cells; ++j) pts.insert(a + span * (double(j) / double(cells)));
    if (k >= 2) {
        // Dyadic-scale refinement toward the endpoints captures the variation
        // of the end cells, which a uniform grid resolves too slowly.
        for (int i = 1; i <= 3 * k; ++i) {
            double off = span * std::ldexp(1.0, -i);
            pts.insert(a + off);
            pts.insert(b - off);
        }
    }
    return {pts.begin(), pts.end()};
}

Profile discretize_profile(const Profile& profile, int k) {
    std::vector<double> partition = refinement_partition(profile, k);
    std::vector<double> values(partition.size() - 1);
    for (size_t i = 0; i + 1 < partition.size(); ++i)
        values[i] = profile.eval(partition[i]);
    return profile.with_function(
        BVFunction::piecewise_constant(std::move(partition), std::move(values)));
}

WitnessSet staircase_witness(const Profile& piecewise_constant, double lambda,
                             std::vector<double> direction, double r_base) {
    if (!(lambda > 0.0 && lambda < 1.0))
        throw precondition_error("staircase_witness: lambda must lie in (0,1)");
    const BVFunction& f = piecewise_constant.function();
    for (const Piece& piece : f.pieces()) {
        const auto* pp = std::get_if<PolyPiece>(&piece);
        if (!pp || poly::degree(pp->coeffs) > 0)
            throw precondition_error("staircase_witness: profile must be piecewise constant");
    }
    if (direction.empty()) direction = default_direction(piecewise_constant.dimension());
    direction = normalized(direction);

    RadiusProfile R(piecewise_constant);
    std::vector<double> g_values(f.piece_count());
    for (size_t i = 0; i < f.piece_count(); ++i)
        g_values[i] = lambda * (R.from_measure(f.right_limits()[i]) - r_base);

    // Nesting certificate: every interior drift jump must stay below the
    // radius jump.
    for (size_t i = 1; i < f.piece_count(); ++i) {
        double dr = R.from_measure(f.right_limits()[i]) - R.from_measure(f.left_limits()[i]);
        double dg = g_values[i] - g_values[i - 1];
        if (std::fabs(dg) > std::fabs(dr) + 1e-12 * (1.0 + std::fabs(dr)))
            throw precondition_error("staircase_witness: drift jump violates disk nesting");
    }

    TubeSet tube(piecewise_constant,
                 BVFunction::piecewise_constant(f.breakpoints(), std::move(g_values)), direction);
    WitnessProvenance prov;
    prov.lambda = lambda;
    prov.direction = direction;
    return {std::move(tube), WitnessKind::Staircase, std::move(prov)};
}

} // namespace schwarz
