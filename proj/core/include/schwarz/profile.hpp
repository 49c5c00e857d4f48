#pragma once

#include <optional>
#include <vector>

#include "schwarz/bv_function.hpp"
#include "schwarz/interval.hpp"

namespace schwarz {

// A slice-measure profile: a nonnegative, compactly supported BV function
// together with the ambient dimension n >= 2. The associated symmetric set
// lives in R x R^{n-1} and has slices of measure profile(z).
class Profile {
public:
    Profile(BVFunction f, int dimension);

    const BVFunction& function() const { return f_; }
    int dimension() const { return n_; }
    double omega() const { return omega_; } // unit ball volume in R^{n-1}

    double eval(double z) const { return f_.eval(z); }
    std::pair<double, double> approx_limits(double z) const { return f_.approx_limits(z); }
    double z_min() const { return f_.z_min(); }
    double z_max() const { return f_.z_max(); }

    Profile with_function(BVFunction f) const { return Profile(std::move(f), n_); }

    bool operator==(const Profile& other) const {
        return n_ == other.n_ && f_ == other.f_;
    }

private:
    BVFunction f_;
    int n_;
    double omega_;
};

// Derived radius view: r(z) = (profile(z) / omega_{n-1})^{1/(n-1)}, the radius
// of the (n-1)-ball with the slice's measure.
class RadiusProfile {
public:
    explicit RadiusProfile(Profile p);

    double operator()(double z) const;
    // a.e. derivative via the chain rule on polynomial pieces; 0 on Cantor
    // pieces and where the profile vanishes.
    double derivative(double z) const;
    std::pair<double, double> limits(double z) const; // (r^, r^)
    double omega() const { return omega_; }
    int dimension() const { return profile_.dimension(); }
    const Profile& profile() const { return profile_; }

    double from_measure(double ell) const; // (ell/omega)^{1/(n-1)}

    // For a Cantor piece of the profile, the radius as a polynomial s(u) in
    // the Cantor variable (so that omega * s^{n-1} equals the piece), when
    // such a polynomial exists.
    std::optional<std::vector<double>> cantor_radius_poly(size_t piece_index) const;

private:
    Profile profile_;
    double omega_;
};

RadiusProfile radius_profile(const Profile& p);

// Maximal open intervals of {z : profile^(z) > 0}. Points where the lower
// approximate limit vanishes (breakpoints with a zero one-sided limit,
// interior touching zeros of polynomial pieces, zeros reached by Cantor
// pieces) separate components. Zero detection uses a 1e-12 * (1 + max|f|)
// floor; the comparison against it is otherwise strict.
std::vector<Interval> positivity_intervals(const Profile& p);

// True iff the derivative of the profile has no singular part in B, i.e. no
// jump atom and no Cantor mass intersects B.
bool is_sobolev(const Profile& p, Interval B);

// Builds a profile whose radius is affine in the Cantor variable on [a, b]:
// r(z) = r0 + r1 * c(t). The profile piece is omega_{n-1} (r0 + r1 u)^{n-1}.
Profile cantor_radius_profile(double r0, double r1, double a, double b, int dimension,
                              bool reversed = false);

} // namespace schwarz
