#include <benchmark/benchmark.h>

#include <cmath>

#include "merid/collapse_models.hpp"
#include "merid/gaussian.hpp"
#include "merid/interference.hpp"
#include "merid/localization.hpp"
#include "merid/protocol.hpp"
#include "merid/special.hpp"
#include "merid/standard_decoherence.hpp"

using namespace merid;

namespace {

const DefaultParameterSet kTable;

void BM_KernelFactor(benchmark::State& state) {
    const auto sphere = kTable.make_sphere(50e-9, 100.0);
    const auto env = kTable.make_environment(torr_to_pascal(1e-14));
    const auto model = air_model(env, sphere);
    const double mass = sphere_mass(sphere);
    double p = 1e-26;
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernel_factor(model, p, 0.0, 1.0, mass));
        p += 1e-30;
    }
}
BENCHMARK(BM_KernelFactor);

void BM_CoherenceRatio(benchmark::State& state) {
    const auto sphere = kTable.make_sphere(50e-9, 100.0);
    const auto env = kTable.make_environment(torr_to_pascal(1e-14));
    const auto model = air_model(env, sphere);
    const auto s0 = thermal_initial_state(sphere_mass(sphere), kTable.omega, kTable.nbar);
    const auto s = evolve_with_decoherence(s0, 1e-3, 0.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(coherence_ratio(model, s, 1e-9));
    }
}
BENCHMARK(BM_CoherenceRatio);

void BM_DiagramRow(benchmark::State& state) {
    SweepScenario sc;
    sc.pressure = torr_to_pascal(1e-14);
    sc.T_internal = 100.0;
    sc.chi = 1000.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            sweep_diagram(100e-9, 110e-9, 2, sc, CollapseModelId(CslId{}), 1));
    }
}
BENCHMARK(BM_DiagramRow);

void BM_SimulatePattern(benchmark::State& state) {
    const auto sphere = kTable.make_sphere(50e-9, 100.0);
    const auto env = kTable.make_environment(torr_to_pascal(1e-14));
    const auto trap = kTable.make_trap();
    const auto models = standard_model(env, sphere);
    const auto times = select_times(sphere, trap, env, 1000.0, models);
    const double sigma =
        std::sqrt(expand_free_coherent(sphere_mass(sphere), trap.omega, times.t1).sigma2);
    const ProtocolPlan plan(times.t1, times.t2, 30e-9, 1000.0, kTable.delta_x, sigma);
    for (auto _ : state) {
        benchmark::DoNotOptimize(simulate_pattern(plan, sphere, trap, models));
    }
}
BENCHMARK(BM_SimulatePattern);

void BM_Erf(benchmark::State& state) {
    double x = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(merid::erf(x));
        x = x < 6.0 ? x + 1e-6 : 0.0;
    }
}
BENCHMARK(BM_Erf);

}  // namespace

BENCHMARK_MAIN();
