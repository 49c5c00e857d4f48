#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "schwarz/bv_function.hpp"
#include "schwarz/symmetral.hpp"

namespace schwarz {
namespace oracle {

// Counter-based generator (splitmix64 finalizer over seed/stream/counter).
// Stateless draws: the i-th variate of a stream depends only on (seed,
// stream, i), so substreams parallelize and results are reproducible.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0);
    std::uint64_t bits(std::uint64_t counter) const;
    double uniform(std::uint64_t counter) const; // in [0, 1)
    static const char* name() { return "splitmix64-counter"; }

private:
    std::uint64_t base_;
};

struct DensityEstimate {
    double theta_lower = 0.0;
    double theta_upper = 0.0;
    std::vector<double> radii_used;
    int samples_per_radius = 0;
    std::uint64_t seed = 0;
    const char* generator = CounterRng::name();
};

// Formula-independent perimeter measurement: triangulates the lateral
// boundary from the parametrization (z, angle) and adds jump-plane areas by
// planar clipping of disk polygons (n = 3) or interval arithmetic (n = 2).
// Cantor pieces are rejected; discretize first.
double oracle_perimeter(const TubeSet& tube, int resolution);

// Monte Carlo estimate of the volume density of the tube at a point, at each
// of the given (positive, decreasing) radii; the returned bounds are the
// min/max over the smallest three radii.
DensityEstimate oracle_density(const TubeSet& tube, const std::vector<double>& x,
                               const std::vector<double>& radii, int samples,
                               std::uint64_t seed);

// Approximate limits estimated from value densities on shrinking intervals
// around z (bisection over the threshold, densities split at 1/4 and 3/4).
std::pair<double, double> oracle_approx_limits(const BVFunction& f, double z, double mesh);

} // namespace oracle
} // namespace schwarz
