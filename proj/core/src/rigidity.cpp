#include "schwarz/rigidity.hpp"

#include <algorithm>
#include <cmath>

namespace schwarz {

RigidityVerdict decide(const Profile& profile) {
    RigidityVerdict verdict;
    std::vector<Interval> components = positivity_intervals(profile);
    if (components.empty()) {
        // Null profile: the symmetral is empty and trivially rigid.
        verdict.rigid = true;
        return verdict;
    }
    if (components.size() > 1) {
        // One witness per gap, placed at its midpoint.
        for (size_t i = 0; i + 1 < components.size(); ++i)
            verdict.failures.push_back(
                Disconnected{0.5 * (components[i].hi + components[i + 1].lo)});
        verdict.rigid = false;
        return verdict;
    }

    Interval J = components.front();
    verdict.J = J;
    const BVFunction& f = profile.function();
    for (const JumpAtom& atom : f.jump_atoms()) {
        if (!J.contains(atom.z)) continue;
        auto [lo, hi] = f.approx_limits(atom.z);
        verdict.failures.push_back(JumpFailure{atom.z, lo, hi});
    }
    for (const CantorAtom& atom : f.cantor_atoms()) {
        double lo = std::max(atom.lo, J.lo), hi = std::min(atom.hi, J.hi);
        if (lo >= hi) continue;
        double mass = f.tv_cantor(Interval::open(lo, hi));
        if (mass > f.jump_tolerance()) verdict.failures.push_back(CantorMassFailure{lo, hi, mass});
    }
    verdict.rigid = verdict.failures.empty();
    return verdict;
}

double vertical_parts_measure(const Profile& profile, Interval omega) {
    if (omega.empty()) return 0.0;
    const BVFunction& f = profile.function();
    return f.tv_jump(omega) + f.tv_cantor(omega);
}

} // namespace schwarz
