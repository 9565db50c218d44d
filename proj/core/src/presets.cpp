#include "thermoent/presets.hpp"

#include <array>

#include "thermoent/errors.hpp"

namespace thermoent {
namespace {

constexpr std::array<Preset, 7> kAllPresets{
    Preset::EqHeatmap, Preset::EqCurves,  Preset::Ablation,       Preset::TeffScan,
    Preset::NeqPoints, Preset::NeqNoeff, Preset::Implementation,
};

// All reservoirs coupled with the same rate; common bath on with its collective term.
BathConfig uniform_baths(double rate) {
    BathConfig baths;
    baths.gamma_a = rate;
    baths.gamma_b = rate;
    baths.gamma_ca = rate;
    baths.gamma_cb = rate;
    baths.common_enabled = true;
    baths.collective_enabled = true;
    return baths;
}

}  // namespace

std::span<const Preset> all_presets() { return kAllPresets; }

// Axis ranges are not labelled in the source figures; the ranges below bracket
// the visible features and are not normative.
ScenarioConfig preset_config(Preset preset) {
    ScenarioConfig cfg;
    cfg.preset = preset;
    switch (preset) {
        case Preset::EqHeatmap:
            cfg.system = {20.0, 20.0, 10.0};
            cfg.baths = uniform_baths(1.0);
            cfg.axes = {{AxisName::T, 0.6, 15.0, 25}, {AxisName::TC, 0.6, 15.0, 25}};
            cfg.output = "eq_heatmap.csv";
            break;
        case Preset::EqCurves:
            cfg.system = {20.0, 20.0, 10.0};
            cfg.baths = uniform_baths(1.0);
            cfg.axes = {{AxisName::TC, 1.0, 4.0, 4}, {AxisName::T, 0.2, 20.0, 100}};
            cfg.output = "eq_curves.csv";
            break;
        case Preset::Ablation:
            cfg.system = {20.0, 20.0, 10.0};
            cfg.baths = uniform_baths(1.0);
            cfg.baths.collective_enabled = false;
            cfg.baths.t_c = 1.0;
            cfg.axes = {{AxisName::T, 0.2, 20.0, 100}};
            cfg.output = "ablation.csv";
            break;
        case Preset::TeffScan:
            cfg.system = {20.0, 20.0, 6.0};
            cfg.baths = uniform_baths(1.0);
            cfg.baths.t_a = 5.0;
            cfg.baths.t_b = 8.0;
            cfg.baths.t_c = 5.0;
            cfg.axes = {{AxisName::DeltaEps, 0.0, 4.0, 81}};
            cfg.output = "teff_scan.csv";
            break;
        case Preset::NeqPoints:
            cfg.system = SystemParams::from_mean_detuning(20.0, 0.95, 6.0);
            cfg.baths = uniform_baths(1.0);
            cfg.baths.t_a = 5.0;
            cfg.baths.t_b = 8.0;
            cfg.axes = {{AxisName::TC, 0.25, 12.0, 48}};
            cfg.output = "neq_points.csv";
            break;
        case Preset::NeqNoeff:
            cfg.system = SystemParams::from_mean_detuning(20.0, 3.0, 6.0);
            cfg.baths = uniform_baths(1.0);
            cfg.baths.t_a = 5.0;
            cfg.baths.t_b = 8.0;
            cfg.axes = {{AxisName::TC, 0.25, 12.0, 48}};
            cfg.output = "neq_noeff.csv";
            break;
        case Preset::Implementation:
            // GHz units: 10 MHz = 0.01, 3.5e-2 MHz = 3.5e-5; temperatures in units of 1 GHz.
            cfg.system = {1.0, 1.0, 0.7};
            cfg.baths = uniform_baths(0.01);
            cfg.baths.dephasing_gamma = 3.5e-5;
            cfg.baths.dephasing_enabled = true;
            cfg.axes = {{AxisName::T, 0.025, 1.0, 40}, {AxisName::TC, 0.025, 1.0, 40}};
            cfg.output = "implementation.csv";
            break;
    }
    return cfg;
}

double dephasing_rate_from_times(double t1, double t2) {
    if (!(t1 > 0.0) || !(t2 > 0.0)) {
        throw ValidationError("T1 and T2 must be positive");
    }
    if (t2 > 2.0 * t1) {
        throw ValidationError("T2 cannot exceed 2 T1");
    }
    return 1.0 / t2 - 1.0 / (2.0 * t1);
}

}  // namespace thermoent
