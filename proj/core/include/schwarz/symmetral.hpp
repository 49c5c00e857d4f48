#pragma once

#include <vector>

#include "schwarz/interval.hpp"
#include "schwarz/profile.hpp"

namespace schwarz {

// A tube set E = {(z, w) : |w - g(z) e| < r(z)} in R x R^{n-1}: slices are
// (n-1)-balls of the profile's slice measure, recentered along the unit
// direction e by the scalar drift g. With g == 0 this is the Schwarz
// symmetral of the profile.
//
// Drift convention: the drift function is 0 to the left of its support and
// clamps to its final value to the right of it (constant tail). Its values
// outside the profile's support never contribute.
class TubeSet {
public:
    TubeSet(Profile profile, BVFunction drift, std::vector<double> direction);

    static TubeSet symmetral(Profile profile);

    const Profile& profile() const { return profile_; }
    const BVFunction& drift() const { return drift_; }
    const std::vector<double>& direction() const { return e_; }
    int dimension() const { return profile_.dimension(); }

    double drift_at(double z) const;
    double drift_left_limit(double z) const;
    double drift_right_limit(double z) const;
    double drift_derivative(double z) const; // a.e., clamped tails are flat

    // Pointwise membership; x = (z, w_1, ..., w_{n-1}).
    bool contains(const std::vector<double>& x) const;

    bool operator==(const TubeSet& other) const {
        return profile_ == other.profile_ && drift_ == other.drift_ && e_ == other.e_;
    }

private:
    Profile profile_;
    BVFunction drift_;
    std::vector<double> e_;
};

// Perimeter over the slab window x R^{n-1}, split into the lateral
// absolutely-continuous contribution, jump-plane contributions, and the
// Cantor contribution. total == ac_part + jump_part + cantor_part.
struct PerimeterBreakdown {
    double ac_part = 0.0;
    double jump_part = 0.0;
    double cantor_part = 0.0;
    double total = 0.0;
    Interval window = Interval::all();
};

struct BoundarySlice {
    double r_lower; // r^ at zbar
    double r_upper; // r^ at zbar
    double measure; // H^{n-1} of the boundary slice annulus
};

struct InequalityCheck {
    double tube_perimeter;      // P(E)
    double symmetral_perimeter; // P(F)
    bool holds;
    double gap; // P(E) - P(F)
};

double volume(const Profile& profile);
double volume(const TubeSet& tube);

// Exact slice formula for the symmetral: the lateral integrand is
// sqrt(boundary_measure(r(z))^2 + derivative(z)^2), jumps contribute their
// approximate-limit gaps and the Cantor part is the singular diffuse mass.
PerimeterBreakdown perimeter_symmetral(const Profile& profile, Interval B = Interval::all());

// The vertical slice of the reduced boundary of the symmetral at zbar is the
// annulus between the two radius envelopes.
BoundarySlice boundary_slice(const Profile& profile, double zbar);

// Perimeter of a drifted tube. Lateral part integrates
// r^{n-2} sqrt(1 + (r' + g' <u,e>)^2) over the slice sphere (two-term sum for
// n = 2, periodic trapezoid in the angle for n = 3); jump planes contribute
// the symmetric difference of the one-sided disks; Cantor pieces with a
// proportional Cantor drift are resolved by staircase refinement.
PerimeterBreakdown perimeter_tube(const TubeSet& tube, Interval B = Interval::all());

InequalityCheck check_inequality(const TubeSet& tube);

} // namespace schwarz
