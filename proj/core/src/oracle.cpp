#include "schwarz/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <set>

#include "schwarz/errors.hpp"
#include "schwarz/geometry.hpp"

namespace schwarz {
namespace oracle {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

} // namespace

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream)
    : base_(splitmix64(seed) ^ splitmix64(0x5851F42D4C957F2DULL + stream * 0xDA942042E4DD58B5ULL)) {}

std::uint64_t CounterRng::bits(std::uint64_t counter) const {
    return splitmix64(base_ + counter * 0x9E3779B97F4A7C15ULL);
}

double CounterRng::uniform(std::uint64_t counter) const {
    return static_cast<double>(bits(counter) >> 11) * 0x1.0p-53;
}

namespace {

struct Vec3 {
    double x, y, z;
};

double triangle_area(const Vec3& a, const Vec3& b, const Vec3& c) {
    const double ux = b.x - a.x, uy = b.y - a.y, uz = b.z - a.z;
    const double vx = c.x - a.x, vy = c.y - a.y, vz = c.z - a.z;
    const double cx = uy * vz - uz * vy;
    const double cy = uz * vx - ux * vz;
    const double cz = ux * vy - uy * vx;
    return 0.5 * std::sqrt(cx * cx + cy * cy + cz * cz);
}

std::vector<std::pair<double, double>> disk_polygon(double cx, double cy, double r, int verts) {
    std::vector<std::pair<double, double>> poly;
    poly.reserve(verts);
    for (int i = 0; i < verts; ++i) {
        double th = 2.0 * M_PI * i / verts;
        poly.push_back({cx + r * std::cos(th), cy + r * std::sin(th)});
    }
    return poly;
}

double polygon_area(const std::vector<std::pair<double, double>>& p) {
    double a = 0.0;
    for (size_t i = 0; i < p.size(); ++i) {
        const auto& [x0, y0] = p[i];
        const auto& [x1, y1] = p[(i + 1) % p.size()];
        a += x0 * y1 - x1 * y0;
    }
    return 0.5 * std::fabs(a);
}

// Sutherland-Hodgman clip of a convex polygon against the half-plane
// (p - a) . nrm >= 0 with a on the clip edge.
std::vector<std::pair<double, double>> clip_halfplane(
    const std::vector<std::pair<double, double>>& poly, double ax, double ay, double nx,
    double ny) {
    std::vector<std::pair<double, double>> out;
    out.reserve(poly.size() + 1);
    const size_t n = poly.size();
    for (size_t i = 0; i < n; ++i) {
        const auto& [px, py] = poly[i];
        const auto& [qx, qy] = poly[(i + 1) % n];
        double dp = (px - ax) * nx + (py - ay) * ny;
        double dq = (qx - ax) * nx + (qy - ay) * ny;
        if (dp >= 0.0) out.push_back({px, py});
        if ((dp >= 0.0) != (dq >= 0.0)) {
            double t = dp / (dp - dq);
            out.push_back({px + t * (qx - px), py + t * (qy - py)});
        }
    }
    return out;
}

// Intersection area of two disks by clipping one disk polygon against the
// edges of the other. Independent of the closed-form lens expression.
double disk_intersection_area_geometric(double d, double r1, double r2, int verts) {
    if (r1 <= 0.0 || r2 <= 0.0) return 0.0;
    if (d >= r1 + r2) return 0.0;
    if (d + std::min(r1, r2) <= std::max(r1, r2))
        return polygon_area(disk_polygon(0.0, 0.0, std::min(r1, r2), verts));
    std::vector<std::pair<double, double>> poly = disk_polygon(0.0, 0.0, r1, verts);
    std::vector<std::pair<double, double>> other = disk_polygon(d, 0.0, r2, verts);
    for (size_t i = 0; i < other.size() && !poly.empty(); ++i) {
        const auto& [ax, ay] = other[i];
        const auto& [bx, by] = other[(i + 1) % other.size()];
        // Inward normal of a counterclockwise edge.
        poly = clip_halfplane(poly, ax, ay, -(by - ay), bx - ax);
    }
    return poly.empty() ? 0.0 : polygon_area(poly);
}

double jump_plane_area_geometric(int n, double d, double r1, double r2, int verts) {
    if (n == 2) {
        if (r1 <= 0.0 && r2 <= 0.0) return 0.0;
        double lo1 = -r1, hi1 = r1;          // first interval, centered at 0
        double lo2 = d - r2, hi2 = d + r2;   // second, centered at d
        double len1 = r1 > 0.0 ? hi1 - lo1 : 0.0;
        double len2 = r2 > 0.0 ? hi2 - lo2 : 0.0;
        double overlap = (r1 > 0.0 && r2 > 0.0)
                             ? std::max(0.0, std::min(hi1, hi2) - std::max(lo1, lo2))
                             : 0.0;
        return len1 + len2 - 2.0 * overlap;
    }
    double a1 = r1 > 0.0 ? polygon_area(disk_polygon(0.0, 0.0, r1, verts)) : 0.0;
    double a2 = r2 > 0.0 ? polygon_area(disk_polygon(0.0, 0.0, r2, verts)) : 0.0;
    double inter = disk_intersection_area_geometric(d, r1, r2, verts);
    return a1 + a2 - 2.0 * inter;
}

void require_no_cantor(const BVFunction& f, const char* what) {
    for (const Piece& p : f.pieces())
        if (std::holds_alternative<CantorPiece>(p))
            throw precondition_error(std::string(what) + ": Cantor piece present; discretize first");
}

} // namespace

double oracle_perimeter(const TubeSet& tube, int resolution) {
    if (resolution < 2) throw precondition_error("oracle_perimeter: resolution must be >= 2");
    const Profile& p = tube.profile();
    const int n = p.dimension();
    if (n != 2 && n != 3)
        throw precondition_error("oracle_perimeter: only n in {2,3} supported");
    const BVFunction& f = p.function();
    require_no_cantor(f, "oracle_perimeter");
    require_no_cantor(tube.drift(), "oracle_perimeter");
    const double omega = p.omega();

    auto radius = [&](double ell) {
        return ell > 0.0 ? std::pow(ell / omega, 1.0 / (n - 1)) : 0.0;
    };

    double total = 0.0;

    // Lateral part: sample each smooth segment between consecutive profile
    // and drift breakpoints.
    for (size_t i = 0; i < f.piece_count(); ++i) {
        double a = f.breakpoints()[i], b = f.breakpoints()[i + 1];
        std::vector<double> cuts = {a};
        {
            const auto& gb = tube.drift().breakpoints();
            auto it = std::upper_bound(gb.begin(), gb.end(), a);
            for (; it != gb.end() && *it < b; ++it) cuts.push_back(*it);
        }
        cuts.push_back(b);

        for (size_t c = 0; c + 1 < cuts.size(); ++c) {
            double s0 = cuts[c], s1 = cuts[c + 1];
            // One-sided values at the segment ends, interior values inside.
            auto ell_at = [&](double z) {
                if (z == s0) return f.right_limit(z);
                if (z == s1) return f.left_limit(z);
                return f.eval(z);
            };
            auto g_at = [&](double z) {
                if (z == s0) return tube.drift_right_limit(z);
                if (z == s1) return tube.drift_left_limit(z);
                return tube.drift_at(z);
            };
            bool occupied = false;
            for (int j = 0; j <= resolution; ++j) {
                double z = s0 + (s1 - s0) * (double(j) / resolution);
                if (ell_at(z) > 0.0) {
                    occupied = true;
                    break;
                }
            }
            if (!occupied) continue;

            if (n == 2) {
                double upper = 0.0, lower = 0.0;
                double pz = s0, pu = g_at(s0) + radius(ell_at(s0)), pl = g_at(s0) - radius(ell_at(s0));
                for (int j = 1; j <= resolution; ++j) {
                    double z = s0 + (s1 - s0) * (double(j) / resolution);
                    double g = g_at(z), r = radius(ell_at(z));
                    double u = g + r, l = g - r;
                    upper += std::hypot(z - pz, u - pu);
                    lower += std::hypot(z - pz, l - pl);
                    pz = z;
                    pu = u;
                    pl = l;
                }
                total += upper + lower;
            } else {
                const std::vector<double>& e = tube.direction();
                std::vector<Vec3> prev(resolution), curr(resolution);
                for (int j = 0; j <= resolution; ++j) {
                    double z = s0 + (s1 - s0) * (double(j) / resolution);
                    double g = g_at(z), r = radius(ell_at(z));
                    for (int m = 0; m < resolution; ++m) {
                        double th = 2.0 * M_PI * m / resolution;
                        curr[m] = {z, g * e[0] + r * std::cos(th), g * e[1] + r * std::sin(th)};
                    }
                    if (j > 0) {
                        for (int m = 0; m < resolution; ++m) {
                            const Vec3& a00 = prev[m];
                            const Vec3& a01 = prev[(m + 1) % resolution];
                            const Vec3& a10 = curr[m];
                            const Vec3& a11 = curr[(m + 1) % resolution];
                            total += triangle_area(a00, a10, a11) + triangle_area(a00, a11, a01);
                        }
                    }
                    std::swap(prev, curr);
                }
            }
        }
    }

    // Jump planes.
    const int verts = std::max(10000, resolution);
    std::set<double> candidates(f.breakpoints().begin(), f.breakpoints().end());
    candidates.insert(tube.drift().breakpoints().begin(), tube.drift().breakpoints().end());
    for (double z : candidates) {
        double rl = radius(f.left_limit(z)), rr = radius(f.right_limit(z));
        if (rl == 0.0 && rr == 0.0) continue;
        double d = std::fabs(tube.drift_right_limit(z) - tube.drift_left_limit(z));
        if (d == 0.0 && std::fabs(rl - rr) <= f.jump_tolerance()) continue;
        total += jump_plane_area_geometric(n, d, rl, rr, verts);
    }

    return total;
}

DensityEstimate oracle_density(const TubeSet& tube, const std::vector<double>& x,
                               const std::vector<double>& radii, int samples,
                               std::uint64_t seed) {
    const int n = tube.dimension();
    if (n != 2 && n != 3)
        throw precondition_error("oracle_density: only n in {2,3} supported");
    if (x.size() != static_cast<size_t>(n))
        throw precondition_error("oracle_density: point has wrong dimension");
    if (samples < 10000) throw precondition_error("oracle_density: samples must be >= 10^4");
    for (size_t i = 0; i < radii.size(); ++i) {
        if (radii[i] <= 0.0) throw precondition_error("oracle_density: radii must be positive");
        if (i > 0 && radii[i] >= radii[i - 1])
            throw precondition_error("oracle_density: radii must be decreasing");
    }
    if (radii.empty()) throw precondition_error("oracle_density: need at least one radius");

    DensityEstimate est;
    est.radii_used = radii;
    est.samples_per_radius = samples;
    est.seed = seed;

    std::vector<double> thetas;
    thetas.reserve(radii.size());
    std::vector<double> pt(static_cast<size_t>(n));
    for (size_t j = 0; j < radii.size(); ++j) {
        const double rho = radii[j];
        const CounterRng rng(seed, j);
        long inside = 0;
        for (long i = 0; i < samples; ++i) {
            const std::uint64_t base = static_cast<std::uint64_t>(i) * 3;
            if (n == 2) {
                double r = rho * std::sqrt(rng.uniform(base));
                double phi = 2.0 * M_PI * rng.uniform(base + 1);
                pt[0] = x[0] + r * std::cos(phi);
                pt[1] = x[1] + r * std::sin(phi);
            } else {
                double r = rho * std::cbrt(rng.uniform(base));
                double ct = 2.0 * rng.uniform(base + 1) - 1.0;
                double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
                double phi = 2.0 * M_PI * rng.uniform(base + 2);
                pt[0] = x[0] + r * ct;
                pt[1] = x[1] + r * st * std::cos(phi);
                pt[2] = x[2] + r * st * std::sin(phi);
            }
            if (tube.contains(pt)) ++inside;
        }
        thetas.push_back(static_cast<double>(inside) / samples);
    }

    size_t first = thetas.size() > 3 ? thetas.size() - 3 : 0;
    est.theta_lower = *std::min_element(thetas.begin() + first, thetas.end());
    est.theta_upper = *std::max_element(thetas.begin() + first, thetas.end());
    return est;
}

std::pair<double, double> oracle_approx_limits(const BVFunction& f, double z, double mesh) {
    if (mesh <= 0.0) throw precondition_error("oracle_approx_limits: mesh must be positive");
    const int kSamples = 4001;
    const double rho = 0.25 * mesh; // innermost of the shrinking intervals
    std::vector<double> values;
    values.reserve(kSamples);
    for (int i = 0; i < kSamples; ++i) {
        double zi = z - rho + 2.0 * rho * (double(i) / (kSamples - 1));
        values.push_back(f.eval(zi));
    }
    std::sort(values.begin(), values.end());
    auto density_above = [&](double s) {
        auto it = std::upper_bound(values.begin(), values.end(), s);
        return static_cast<double>(values.end() - it) / kSamples;
    };

    double lo_s = values.front() - 1.0, hi_s = values.back() + 1.0;
    // Lower limit: sup{s : density of {f > s} > 3/4}.
    double a = lo_s, b = hi_s;
    for (int it = 0; it < 80; ++it) {
        double midv = 0.5 * (a + b);
        if (density_above(midv) > 0.75) a = midv;
        else b = midv;
    }
    double lower = a;
    // Upper limit: inf{s : density of {f > s} < 1/4}.
    a = lo_s;
    b = hi_s;
    for (int it = 0; it < 80; ++it) {
        double midv = 0.5 * (a + b);
        if (density_above(midv) < 0.25) b = midv;
        else a = midv;
    }
    double upper = b;
    return {std::min(lower, upper), std::max(lower, upper)};
}

} // namespace oracle
} // namespace schwarz
