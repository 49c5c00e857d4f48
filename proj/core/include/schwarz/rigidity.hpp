#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "schwarz/interval.hpp"
#include "schwarz/profile.hpp"

namespace schwarz {

// Machine-checkable reasons why rigidity fails for a profile.
struct Disconnected {
    double zbar; // point with vanishing lower envelope, positivity on both sides
};
struct JumpFailure {
    double zbar;
    double lower, upper; // approximate limits at the jump
};
struct CantorMassFailure {
    double lo, hi;
    double mass; // |D^c| carried inside the positivity interval
};
using FailureWitness = std::variant<Disconnected, JumpFailure, CantorMassFailure>;

// Verdict of the rigidity characterisation: rigid iff the positivity set
// {profile^ > 0} is a single interval J and the profile is Sobolev on J.
// When not rigid, `failures` lists one witness per violation. J is present
// only when the positivity set is a single interval.
struct RigidityVerdict {
    bool rigid = false;
    std::optional<Interval> J;
    std::vector<FailureWitness> failures;
};

RigidityVerdict decide(const Profile& profile);

// H^{n-1} measure of the vertical part of the symmetral's reduced boundary
// over Omega x R^{n-1}: the singular mass |D^s profile|(Omega). Zero exactly
// when the profile is Sobolev on Omega.
double vertical_parts_measure(const Profile& profile, Interval omega);

} // namespace schwarz
