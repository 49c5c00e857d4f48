#include "schwarz/bv_function.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>

#include "schwarz/cantor.hpp"
#include "schwarz/errors.hpp"
#include "schwarz/poly.hpp"

namespace schwarz {

namespace {

constexpr int kMaxDegree = 8;

// (left edge, right edge) limits of a Cantor piece on its own interval.
std::pair<double, double> edge_values(const CantorPiece& c) {
    double q0 = poly::eval(c.coeffs, 0.0);
    double q1 = poly::eval(c.coeffs, 1.0);
    return c.reversed ? std::make_pair(q1, q0) : std::make_pair(q0, q1);
}

} // namespace

Decomposition::Decomposition(std::vector<JumpAtom> j, std::vector<CantorAtom> c, BVFunction ac,
                             BVFunction cantor)
    : jump_atoms(std::move(j)),
      cantor_atoms(std::move(c)),
      ac_(std::make_shared<BVFunction>(std::move(ac))),
      cantor_(std::make_shared<BVFunction>(std::move(cantor))) {}

BVFunction::BVFunction(std::vector<double> breakpoints, std::vector<Piece> pieces)
    : breakpoints_(std::move(breakpoints)), pieces_(std::move(pieces)) {
    if (breakpoints_.size() < 2)
        throw std::invalid_argument("BVFunction: need at least two breakpoints");
    if (pieces_.size() + 1 != breakpoints_.size())
        throw std::invalid_argument("BVFunction: piece count must be breakpoints - 1");
    for (size_t i = 0; i + 1 < breakpoints_.size(); ++i) {
        if (!(breakpoints_[i] < breakpoints_[i + 1]))
            throw std::invalid_argument("BVFunction: breakpoints must be strictly increasing");
        if (!std::isfinite(breakpoints_[i]) || !std::isfinite(breakpoints_[i + 1]))
            throw std::invalid_argument("BVFunction: breakpoints must be finite");
    }
    for (const Piece& p : pieces_) {
        const std::vector<double>* coeffs = nullptr;
        if (const auto* pp = std::get_if<PolyPiece>(&p)) coeffs = &pp->coeffs;
        else coeffs = &std::get<CantorPiece>(p).coeffs;
        if (coeffs->empty())
            throw std::invalid_argument("BVFunction: piece needs at least one coefficient");
        if (coeffs->size() > kMaxDegree + 1)
            throw std::invalid_argument("BVFunction: piece degree exceeds 8");
        for (double v : *coeffs)
            if (!std::isfinite(v)) throw std::invalid_argument("BVFunction: non-finite coefficient");
    }

    const size_t M = pieces_.size();
    left_limits_.assign(M + 1, 0.0);
    right_limits_.assign(M + 1, 0.0);
    for (size_t i = 0; i < M; ++i) {
        double le, re;
        if (const auto* pp = std::get_if<PolyPiece>(&pieces_[i])) {
            le = poly::eval(pp->coeffs, breakpoints_[i]);
            re = poly::eval(pp->coeffs, breakpoints_[i + 1]);
        } else {
            std::tie(le, re) = edge_values(std::get<CantorPiece>(pieces_[i]));
        }
        right_limits_[i] = le;
        left_limits_[i + 1] = re;
    }

    max_abs_ = 0.0;
    for (size_t i = 0; i < M; ++i) {
        if (const auto* pp = std::get_if<PolyPiece>(&pieces_[i])) {
            max_abs_ = std::max(max_abs_,
                                poly::max_abs_on(pp->coeffs, breakpoints_[i], breakpoints_[i + 1]));
        } else {
            const auto& cp = std::get<CantorPiece>(pieces_[i]);
            max_abs_ = std::max(max_abs_, poly::max_abs_on(cp.coeffs, 0.0, 1.0));
        }
    }
}

BVFunction BVFunction::constant_on(double value, double a, double b) {
    return BVFunction({a, b}, {PolyPiece{{value}}});
}

BVFunction BVFunction::polynomial_on(std::vector<double> coeffs, double a, double b) {
    return BVFunction({a, b}, {PolyPiece{std::move(coeffs)}});
}

BVFunction BVFunction::piecewise_constant(std::vector<double> breakpoints,
                                          std::vector<double> values) {
    std::vector<Piece> pieces;
    pieces.reserve(values.size());
    for (double v : values) pieces.push_back(PolyPiece{{v}});
    return BVFunction(std::move(breakpoints), std::move(pieces));
}

int BVFunction::piece_index(double z) const {
    if (z < z_min() || z >= z_max()) return -1;
    auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), z);
    return static_cast<int>(it - breakpoints_.begin()) - 1;
}

double BVFunction::piece_value(size_t i, double z) const {
    if (const auto* pp = std::get_if<PolyPiece>(&pieces_[i])) return poly::eval(pp->coeffs, z);
    const auto& cp = std::get<CantorPiece>(pieces_[i]);
    double t = (z - breakpoints_[i]) / (breakpoints_[i + 1] - breakpoints_[i]);
    double u = cantor_function(cp.reversed ? 1.0 - t : t);
    return poly::eval(cp.coeffs, u);
}

double BVFunction::eval(double z) const {
    int i = piece_index(z);
    if (i < 0) return 0.0;
    if (z == breakpoints_[i]) return right_limits_[i];
    return piece_value(static_cast<size_t>(i), z);
}

double BVFunction::left_limit(double z) const {
    if (z <= z_min() || z > z_max()) return 0.0;
    auto it = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), z);
    if (it != breakpoints_.end() && *it == z)
        return left_limits_[static_cast<size_t>(it - breakpoints_.begin())];
    return piece_value(static_cast<size_t>(it - breakpoints_.begin()) - 1, z);
}

double BVFunction::right_limit(double z) const {
    if (z < z_min() || z >= z_max()) return 0.0;
    auto it = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), z);
    if (it != breakpoints_.end() && *it == z)
        return right_limits_[static_cast<size_t>(it - breakpoints_.begin())];
    return piece_value(static_cast<size_t>(it - breakpoints_.begin()) - 1, z);
}

std::pair<double, double> BVFunction::approx_limits(double z) const {
    double L = left_limit(z), R = right_limit(z);
    return {std::min(L, R), std::max(L, R)};
}

double BVFunction::derivative(double z) const {
    int i = piece_index(z);
    if (i < 0) return 0.0;
    if (const auto* pp = std::get_if<PolyPiece>(&pieces_[static_cast<size_t>(i)]))
        return poly::eval(poly::derivative(pp->coeffs), z);
    return 0.0;
}

double BVFunction::tv_ac(Interval B) const {
    double tv = 0.0;
    for (size_t i = 0; i < pieces_.size(); ++i) {
        const auto* pp = std::get_if<PolyPiece>(&pieces_[i]);
        if (!pp) continue;
        auto [a, b] = B.clip(breakpoints_[i], breakpoints_[i + 1]);
        if (a < b) tv += poly::total_variation(pp->coeffs, a, b);
    }
    return tv;
}

double BVFunction::tv_cantor(Interval B) const {
    double tv = 0.0;
    for (size_t i = 0; i < pieces_.size(); ++i) {
        const auto* cp = std::get_if<CantorPiece>(&pieces_[i]);
        if (!cp) continue;
        auto [a, b] = B.clip(breakpoints_[i], breakpoints_[i + 1]);
        if (a >= b) continue;
        double h = breakpoints_[i + 1] - breakpoints_[i];
        double t0 = (a - breakpoints_[i]) / h;
        double t1 = (b - breakpoints_[i]) / h;
        double u0, u1;
        if (cp->reversed) {
            u0 = cantor_function(1.0 - t1);
            u1 = cantor_function(1.0 - t0);
        } else {
            u0 = cantor_function(t0);
            u1 = cantor_function(t1);
        }
        if (u0 < u1) tv += poly::total_variation(cp->coeffs, u0, u1);
    }
    return tv;
}

double BVFunction::tv_jump(Interval B) const {
    double tv = 0.0;
    const double tol = jump_tolerance();
    for (size_t i = 0; i < breakpoints_.size(); ++i) {
        double h = right_limits_[i] - left_limits_[i];
        if (std::fabs(h) > tol && B.contains(breakpoints_[i])) tv += std::fabs(h);
    }
    return tv;
}

double BVFunction::total_variation(Interval B) const {
    if (B.empty()) throw precondition_error("total_variation: empty interval");
    return tv_ac(B) + tv_jump(B) + tv_cantor(B);
}

std::vector<JumpAtom> BVFunction::jump_atoms() const {
    std::vector<JumpAtom> atoms;
    const double tol = jump_tolerance();
    for (size_t i = 0; i < breakpoints_.size(); ++i) {
        double h = right_limits_[i] - left_limits_[i];
        if (std::fabs(h) > tol) atoms.push_back({breakpoints_[i], h});
    }
    return atoms;
}

std::vector<CantorAtom> BVFunction::cantor_atoms() const {
    std::vector<CantorAtom> atoms;
    const double tol = jump_tolerance();
    for (size_t i = 0; i < pieces_.size(); ++i) {
        const auto* cp = std::get_if<CantorPiece>(&pieces_[i]);
        if (!cp) continue;
        double var = poly::total_variation(cp->coeffs, 0.0, 1.0);
        if (var <= tol) continue;
        auto [le, re] = edge_values(*cp);
        atoms.push_back({breakpoints_[i], breakpoints_[i + 1], re - le, var});
    }
    return atoms;
}

Decomposition BVFunction::decompose() const {
    const double tol = jump_tolerance();
    std::vector<JumpAtom> jumps = jump_atoms();
    std::vector<CantorAtom> cantors = cantor_atoms();

    std::vector<Piece> ac_pieces, cantor_pieces;
    double J = 0.0; // cumulative jump mass, atoms included when reached
    double C = 0.0; // cumulative Cantor mass
    for (size_t i = 0; i < pieces_.size(); ++i) {
        double h = right_limits_[i] - left_limits_[i];
        if (std::fabs(h) > tol) J += h;
        if (const auto* pp = std::get_if<PolyPiece>(&pieces_[i])) {
            std::vector<double> shifted = pp->coeffs;
            shifted[0] -= J + C;
            ac_pieces.push_back(PolyPiece{std::move(shifted)});
            cantor_pieces.push_back(PolyPiece{{C}});
        } else {
            const auto& cp = std::get<CantorPiece>(pieces_[i]);
            auto [le, re] = edge_values(cp);
            ac_pieces.push_back(PolyPiece{{right_limits_[i] - J - C}});
            std::vector<double> shifted = cp.coeffs;
            shifted[0] += C - le;
            cantor_pieces.push_back(CantorPiece{std::move(shifted), cp.reversed});
            C += re - le;
        }
    }
    return Decomposition(std::move(jumps), std::move(cantors),
                         BVFunction(breakpoints_, std::move(ac_pieces)),
                         BVFunction(breakpoints_, std::move(cantor_pieces)));
}

double BVFunction::integral() const {
    double sum = 0.0;
    for (size_t i = 0; i < pieces_.size(); ++i) {
        double a = breakpoints_[i], b = breakpoints_[i + 1];
        if (const auto* pp = std::get_if<PolyPiece>(&pieces_[i])) {
            sum += poly::integral(pp->coeffs, a, b);
        } else {
            const auto& cp = std::get<CantorPiece>(pieces_[i]);
            sum += (b - a) * cantor_poly_integral(cp.coeffs, 0.0, 1.0, cp.reversed);
        }
    }
    return sum;
}

BVFunction BVFunction::reflected() const {
    std::vector<double> bks(breakpoints_.rbegin(), breakpoints_.rend());
    for (double& z : bks) z = -z;
    std::vector<Piece> pieces(pieces_.rbegin(), pieces_.rend());
    for (Piece& p : pieces) {
        if (auto* pp = std::get_if<PolyPiece>(&p)) {
            pp->coeffs = poly::compose_affine(pp->coeffs, 0.0, -1.0);
        } else {
            auto& cp = std::get<CantorPiece>(p);
            cp.reversed = !cp.reversed;
        }
    }
    return BVFunction(std::move(bks), std::move(pieces));
}

bool BVFunction::operator==(const BVFunction& other) const {
    if (breakpoints_ != other.breakpoints_) return false;
    if (pieces_.size() != other.pieces_.size()) return false;
    for (size_t i = 0; i < pieces_.size(); ++i) {
        const Piece& a = pieces_[i];
        const Piece& b = other.pieces_[i];
        if (a.index() != b.index()) return false;
        if (const auto* pa = std::get_if<PolyPiece>(&a)) {
            if (pa->coeffs != std::get<PolyPiece>(b).coeffs) return false;
        } else {
            const auto& ca = std::get<CantorPiece>(a);
            const auto& cb = std::get<CantorPiece>(b);
            if (ca.coeffs != cb.coeffs || ca.reversed != cb.reversed) return false;
        }
    }
    return true;
}

} // namespace schwarz
