#pragma once

#include <optional>
#include <vector>

#include "schwarz/profile.hpp"
#include "schwarz/symmetral.hpp"

namespace schwarz {

enum class WitnessKind { Split, Jump, Cantor, Staircase };

struct WitnessProvenance {
    std::optional<double> zbar;
    std::vector<double> tau;
    std::optional<double> lambda;
    std::vector<double> direction;
    std::optional<int> depth;
};

// An explicit equality case of the perimeter inequality: an l-distributed
// tube with P(E) = P(F) and non-constant drift.
struct WitnessSet {
    TubeSet tube;
    WitnessKind kind;
    WitnessProvenance provenance;
};

// Split construction at a disconnection point: everything right of zbar is
// translated by tau. Requires profile^(zbar) == 0 with positivity on both
// sides; any tau != 0 is admissible.
WitnessSet split_witness(const Profile& profile, double zbar, std::vector<double> tau);

// Jump construction: translate everything right of a jump point by tau with
// 0 < |tau| < r^(zbar) - r^(zbar), which keeps the one-sided disks nested.
WitnessSet jump_witness(const Profile& profile, double zbar, std::vector<double> tau);

// Cantor construction: drift lambda * (r(z) - r(a)) across a Cantor piece
// (a,b) on which the profile stays positive, constant afterwards; lambda in
// (0,1). With `atom_index` set, uses that entry of the profile's Cantor atom
// list instead of the first eligible one. Direction defaults to the first
// coordinate axis.
WitnessSet cantor_witness(const Profile& profile, double lambda,
                          std::vector<double> direction = {},
                          std::optional<size_t> atom_index = std::nullopt);

// Piecewise-constant sampling of a continuous profile on nested partitions:
// profile breakpoints joined with a dyadic grid of mesh <= span/2^k plus
// dyadically refined points toward the support endpoints (k >= 2). Left
// samples, left-closed right-open pieces.
Profile discretize_profile(const Profile& profile, int k);

// The nested partition used by discretize_profile.
std::vector<double> refinement_partition(const Profile& profile, int k);

// Staircase tube over a piecewise-constant profile: drift
// lambda * (r(z) - r_base). Every interior jump plane stays nested, so the
// perimeter matches the symmetral's exactly at finite depth.
WitnessSet staircase_witness(const Profile& piecewise_constant, double lambda,
                             std::vector<double> direction, double r_base);

} // namespace schwarz
