#pragma once

#include <memory>
#include <utility>
#include <variant>
#include <vector>

#include "schwarz/interval.hpp"

namespace schwarz {

// Polynomial piece: value = sum_j coeffs[j] z^j in the global coordinate.
struct PolyPiece {
    std::vector<double> coeffs;
};

// Cantor piece on (z_i, z_{i+1}): value = q(c(t)) with t the normalized
// position in the piece, c the standard ternary Cantor function and q the
// polynomial given by coeffs. With `reversed`, t is replaced by 1 - t.
// The affine case q(u) = base + amplitude*u is the usual staircase.
struct CantorPiece {
    std::vector<double> coeffs;
    bool reversed = false;
};

using Piece = std::variant<PolyPiece, CantorPiece>;

struct JumpAtom {
    double z;
    double height; // right limit minus left limit
};

struct CantorAtom {
    double lo, hi;
    double mass;      // signed: right edge value minus left edge value
    double variation; // |D^c| carried by the piece
};

class BVFunction;

// Three-part derivative split. `ac` is anchored at zero on the left support
// edge and, together with `cantor` and the atom list, reproduces the original
// on the interior of the support:
//   f(z) = ac(z) + cantor(z) + sum of jump heights at atoms <= z.
// Both part functions use the compact-support representation, so they carry
// an artificial closing jump at the right support edge that is not part of
// the decomposed derivative.
struct Decomposition {
    std::vector<JumpAtom> jump_atoms;
    std::vector<CantorAtom> cantor_atoms;
    const BVFunction& ac() const { return *ac_; }
    const BVFunction& cantor() const { return *cantor_; }

    Decomposition(std::vector<JumpAtom> j, std::vector<CantorAtom> c, BVFunction ac,
                  BVFunction cantor);
    std::shared_ptr<const BVFunction> ac_, cantor_;
};

// One-dimensional function of bounded variation: identically zero outside a
// compact support interval, piecewise polynomial / Cantor-staircase inside.
// Evaluation at a breakpoint returns the right limit (chi_{[z_i, z_{i+1})}
// convention); outside the support it returns 0.
class BVFunction {
public:
    BVFunction(std::vector<double> breakpoints, std::vector<Piece> pieces);

    static BVFunction constant_on(double value, double a, double b);
    static BVFunction polynomial_on(std::vector<double> coeffs, double a, double b);
    // values[i] on [breakpoints[i], breakpoints[i+1])
    static BVFunction piecewise_constant(std::vector<double> breakpoints,
                                         std::vector<double> values);

    double z_min() const { return breakpoints_.front(); }
    double z_max() const { return breakpoints_.back(); }
    const std::vector<double>& breakpoints() const { return breakpoints_; }
    const std::vector<Piece>& pieces() const { return pieces_; }
    size_t piece_count() const { return pieces_.size(); }

    double eval(double z) const;
    double left_limit(double z) const;
    double right_limit(double z) const;

    // (f^, f^) approximate lower/upper limits. In this class they are the
    // min/max of the two one-sided limits at breakpoints and the plain value
    // elsewhere.
    std::pair<double, double> approx_limits(double z) const;

    // a.e. derivative: polynomial pieces differentiate, Cantor pieces give 0.
    double derivative(double z) const;

    double total_variation(Interval B) const; // rejects empty B
    double tv_ac(Interval B) const;
    double tv_jump(Interval B) const;
    double tv_cantor(Interval B) const;

    std::vector<JumpAtom> jump_atoms() const;
    std::vector<CantorAtom> cantor_atoms() const;
    Decomposition decompose() const;

    double integral() const; // over the whole line, in closed form

    double max_abs() const { return max_abs_; }
    // Scale used to decide whether a breakpoint carries a jump atom.
    double jump_tolerance() const { return 1e-12 * (1.0 + max_abs_); }

    BVFunction reflected() const; // z -> -z

    // Index of the piece whose half-open interval [z_i, z_{i+1}) contains z,
    // or -1 outside [z_min, z_max).
    int piece_index(double z) const;

    // One-sided limits stored per breakpoint (left_limits[0] and
    // right_limits[M] are 0: the function vanishes outside its support).
    const std::vector<double>& left_limits() const { return left_limits_; }
    const std::vector<double>& right_limits() const { return right_limits_; }

    bool operator==(const BVFunction& other) const;

private:
    double piece_value(size_t i, double z) const;

    std::vector<double> breakpoints_;
    std::vector<Piece> pieces_;
    std::vector<double> left_limits_, right_limits_;
    double max_abs_ = 0.0;
};

} // namespace schwarz
