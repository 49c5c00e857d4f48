#include <doctest.h>

#include <cmath>

#include "schwarz/counterexamples.hpp"
#include "schwarz/rigidity.hpp"
#include "schwarz/symmetral.hpp"
#include "helpers.hpp"

using namespace schwarz;
using doctest::Approx;

TEST_CASE("rigidity verdicts on golden profiles") {
    RigidityVerdict ball = decide(golden::ball());
    CHECK(ball.rigid);
    REQUIRE(ball.J.has_value());
    CHECK(ball.J->lo == Approx(-1.0));
    CHECK(ball.J->hi == Approx(1.0));

    RigidityVerdict step = decide(golden::step());
    CHECK_FALSE(step.rigid);
    REQUIRE(step.failures.size() == 1);
    const auto* jf = std::get_if<JumpFailure>(&step.failures[0]);
    REQUIRE(jf != nullptr);
    CHECK(jf->zbar == Approx(1.0));
    CHECK(jf->lower == Approx(M_PI));
    CHECK(jf->upper == Approx(4.0 * M_PI));

    RigidityVerdict two = decide(golden::two_component());
    CHECK_FALSE(two.rigid);
    REQUIRE(two.failures.size() == 1);
    const auto* df = std::get_if<Disconnected>(&two.failures[0]);
    REQUIRE(df != nullptr);
    CHECK(df->zbar == Approx(1.5));

    RigidityVerdict cant = decide(golden::cantor());
    CHECK_FALSE(cant.rigid);
    REQUIRE(cant.failures.size() == 1);
    const auto* cf = std::get_if<CantorMassFailure>(&cant.failures[0]);
    REQUIRE(cf != nullptr);
    CHECK(cf->mass == Approx(3.0 * M_PI).epsilon(1e-12));

    // Boundary jumps do not spoil rigidity: the cylinder is rigid.
    CHECK(decide(golden::cylinder()).rigid);
}

TEST_CASE("vertical parts measure") {
    CHECK(vertical_parts_measure(golden::step(), Interval::open(0.0, 2.0)) ==
          Approx(3.0 * M_PI).epsilon(1e-13));
    CHECK(vertical_parts_measure(golden::ball(), Interval::open(-1.0, 1.0)) == 0.0);
    CHECK(vertical_parts_measure(golden::cantor(), Interval::open(0.0, 1.0)) ==
          Approx(3.0 * M_PI).epsilon(1e-12));
}

TEST_CASE("sobolev equivalence over a profile battery") {
    testutil::Gen gen(314);
    int agreements = 0;
    for (int i = 0; i < 60; ++i) {
        Profile p = (i % 3 == 0) ? gen.continuous_profile(3, true) : gen.rough_profile(2 + i % 2);
        std::vector<Interval> comps = positivity_intervals(p);
        for (const Interval& J : comps) {
            bool sob = is_sobolev(p, J);
            double vertical = vertical_parts_measure(p, J);
            CHECK(sob == (vertical == 0.0));
            ++agreements;
        }
    }
    CHECK(agreements >= 60);
}

TEST_CASE("non-rigid verdicts come with equality witnesses") {
    testutil::Gen gen(5150);
    int witnesses_checked = 0;
    for (int i = 0; i < 24; ++i) {
        int n = 2 + i % 2;
        Profile p = gen.rough_profile(n);
        RigidityVerdict v = decide(p);
        if (v.rigid) continue;
        for (const FailureWitness& w : v.failures) {
            WitnessSet ws = [&]() -> WitnessSet {
                if (const auto* d = std::get_if<Disconnected>(&w)) {
                    std::vector<double> tau(static_cast<size_t>(n) - 1, 0.0);
                    tau[0] = 0.7;
                    return split_witness(p, d->zbar, tau);
                }
                if (const auto* j = std::get_if<JumpFailure>(&w)) {
                    BoundarySlice s = boundary_slice(p, j->zbar);
                    std::vector<double> tau(static_cast<size_t>(n) - 1, 0.0);
                    tau[0] = 0.5 * (s.r_upper - s.r_lower);
                    return jump_witness(p, j->zbar, tau);
                }
                const auto& c = std::get<CantorMassFailure>(w);
                const auto atoms = p.function().cantor_atoms();
                for (size_t k = 0; k < atoms.size(); ++k)
                    if (atoms[k].lo <= c.lo && c.hi <= atoms[k].hi)
                        return cantor_witness(p, 0.5, {}, k);
                return cantor_witness(p, 0.5);
            }();
            InequalityCheck chk = check_inequality(ws.tube);
            CHECK(std::fabs(chk.gap) <= 1e-6 * (1.0 + chk.symmetral_perimeter));

            // Non-triviality: the drift takes two values separated on sets of
            // positive length.
            const BVFunction& g = ws.tube.drift();
            double gmin = 1e300, gmax = -1e300;
            for (double t = 0.01; t < 1.0; t += 0.01) {
                double z = p.z_min() + (p.z_max() - p.z_min()) * t;
                double val = ws.tube.drift_at(z);
                gmin = std::min(gmin, val);
                gmax = std::max(gmax, val);
            }
            CHECK(gmax - gmin > 1e-9);
            CHECK(g.z_max() > g.z_min());
            ++witnesses_checked;
        }
    }
    CHECK(witnesses_checked >= 10);
}

TEST_CASE("rigid profiles strictly increase under nontrivial drifts") {
    testutil::Gen gen(777);
    int tested = 0;
    for (int i = 0; i < 10; ++i) {
        int n = 2 + i % 2;
        Profile p = gen.continuous_profile(n, false);
        if (!decide(p).rigid) continue;
        for (int k = 0; k < 10; ++k) {
            BVFunction g = gen.aligned_drift(p, 0.7);
            Interval J = *decide(p).J;
            if (g.total_variation(J) <= 0.01) continue;
            TubeSet tube(p, g, gen.direction(n));
            InequalityCheck chk = check_inequality(tube);
            CHECK(chk.gap > 1e-6);
            ++tested;
        }
    }
    CHECK(tested >= 30);
}
