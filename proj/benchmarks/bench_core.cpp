#include <benchmark/benchmark.h>

#include "thermoent/observables.hpp"
#include "thermoent/presets.hpp"
#include "thermoent/sweep.hpp"

using namespace thermoent;

namespace {

BathConfig baths() {
    BathConfig cfg;
    cfg.t_a = 5.0;
    cfg.t_b = 8.0;
    cfg.t_c = 2.0;
    cfg.gamma_a = cfg.gamma_b = cfg.gamma_ca = cfg.gamma_cb = 1.0;
    cfg.common_enabled = cfg.collective_enabled = true;
    return cfg;
}

void BM_BuildLiouvillian(benchmark::State& state) {
    const SystemParams params = SystemParams::from_mean_detuning(20.0, 0.95, 6.0);
    const BathConfig cfg = baths();
    for (auto _ : state) benchmark::DoNotOptimize(build_liouvillian(params, cfg));
}
BENCHMARK(BM_BuildLiouvillian);

void BM_SteadyState(benchmark::State& state) {
    const Liouvillian l = build_liouvillian(SystemParams::from_mean_detuning(20.0, 0.95, 6.0), baths());
    for (auto _ : state) benchmark::DoNotOptimize(steady_state(l));
}
BENCHMARK(BM_SteadyState);

void BM_Analyze(benchmark::State& state) {
    const SystemParams params = SystemParams::from_mean_detuning(20.0, 0.95, 6.0);
    const BathConfig cfg = baths();
    for (auto _ : state) benchmark::DoNotOptimize(analyze(params, cfg));
}
BENCHMARK(BM_Analyze);

void BM_Sweep(benchmark::State& state) {
    ScenarioConfig cfg = preset_config(Preset::EqHeatmap);
    cfg.axes = {{AxisName::T, 0.6, 15.0, 10}, {AxisName::TC, 0.6, 15.0, 10}};
    const RunOptions options{static_cast<unsigned>(state.range(0)), 7};
    for (auto _ : state) benchmark::DoNotOptimize(run_scenario(cfg, options));
    state.SetItemsProcessed(state.iterations() * 100);
}
BENCHMARK(BM_Sweep)->Arg(1)->Arg(2)->UseRealTime()->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
