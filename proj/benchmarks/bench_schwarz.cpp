#include <benchmark/benchmark.h>

#include <cmath>

#include "schwarz/cantor.hpp"
#include "schwarz/counterexamples.hpp"
#include "schwarz/oracle.hpp"
#include "schwarz/rigidity.hpp"
#include "schwarz/symmetral.hpp"

using namespace schwarz;

namespace {

Profile ball() { return Profile(BVFunction::polynomial_on({M_PI, 0.0, -M_PI}, -1.0, 1.0), 3); }

Profile step() {
    return Profile(BVFunction::piecewise_constant({0.0, 1.0, 2.0}, {4.0 * M_PI, M_PI}), 3);
}

Profile cantor() {
    return Profile(BVFunction({0.0, 1.0}, {CantorPiece{{M_PI, 2.0 * M_PI, M_PI}, false}}), 3);
}

} // namespace

static void BM_CantorEval(benchmark::State& state) {
    double t = 0.12345;
    for (auto _ : state) {
        benchmark::DoNotOptimize(cantor_function(t));
        t += 1e-9;
    }
}
BENCHMARK(BM_CantorEval);

static void BM_PerimeterBall(benchmark::State& state) {
    Profile p = ball();
    for (auto _ : state) benchmark::DoNotOptimize(perimeter_symmetral(p).total);
}
BENCHMARK(BM_PerimeterBall);

static void BM_PerimeterLensTube(benchmark::State& state) {
    TubeSet tube(step(), BVFunction::constant_on(1.5, 1.0, 2.0), {1.0, 0.0});
    for (auto _ : state) benchmark::DoNotOptimize(perimeter_tube(tube).total);
}
BENCHMARK(BM_PerimeterLensTube);

static void BM_RigidityDecide(benchmark::State& state) {
    Profile p = cantor();
    for (auto _ : state) benchmark::DoNotOptimize(decide(p).rigid);
}
BENCHMARK(BM_RigidityDecide);

static void BM_StaircaseRefinement(benchmark::State& state) {
    Profile p = cantor();
    const int depth = static_cast<int>(state.range(0));
    for (auto _ : state) {
        Profile pk = discretize_profile(p, depth);
        RadiusProfile R(pk);
        WitnessSet st = staircase_witness(pk, 0.5, {}, R.from_measure(pk.eval(0.0)));
        benchmark::DoNotOptimize(perimeter_tube(st.tube, Interval::open(0.0, 1.0)).total);
    }
    state.SetComplexityN(1 << depth);
}
BENCHMARK(BM_StaircaseRefinement)->Arg(6)->Arg(8)->Arg(10)->Complexity();

static void BM_OraclePerimeter(benchmark::State& state) {
    TubeSet tube = TubeSet::symmetral(ball());
    const int res = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(oracle::oracle_perimeter(tube, res));
}
BENCHMARK(BM_OraclePerimeter)->Arg(32)->Arg(64)->Arg(128);

BENCHMARK_MAIN();
