#pragma once

#include <functional>
#include <string>
#include <vector>

#include "thermoent/config.hpp"

namespace thermoent {

struct SweepRow {
    std::vector<double> axis_values;
    double c_ab = 0.0;
    double c_abc = 0.0;
    double delta_c = 0.0;
    double q_a = 0.0;
    double q_b = 0.0;
    double q_c = 0.0;
    double q_dep = 0.0;
    double t_eff_1 = 0.0;
    double t_eff_2 = 0.0;
    double residual = 0.0;
    /// Empty on success.
    std::string error;
};

struct RunOptions {
    unsigned threads = 1;
    /// Every n-th row is re-checked against the observable invariants (0 disables).
    std::size_t check_stride = 7;
};

/// Evaluate one parameter point: steady state without (c_ab) and with (c_abc) the common bath.
SweepRow evaluate_point(const SystemParams& system, const BathConfig& baths);

/// Row-major grid over cfg.axes (first axis outermost); rows in deterministic order.
std::vector<SweepRow> run_scenario(const ScenarioConfig& cfg, const RunOptions& options = {});

/// Same pipeline, for absolute-unit configs with dephasing enabled.
std::vector<SweepRow> run_implementation_scenario(const ScenarioConfig& cfg,
                                                  const RunOptions& options = {});

struct RatioRow {
    double omega = 0.0;
    double c_eq = 0.0;
    double c_neq = 0.0;
    double ratio = 0.0;
    double t_max = 0.0;
    int t_count = 0;
    std::string error;
};

/// For each Ω on the omega axis: C^eq = max_T C(T_A=T_B=T_C=T), C^neq = max over
/// T_C ≤ T of C(T_A=T_B=T, T_C), and their ratio.
std::vector<RatioRow> run_ratio_sweep(const ScenarioConfig& cfg, const RunOptions& options = {});

/// Runs fn(0..n-1) on up to `threads` workers. fn must not throw.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& fn);

}  // namespace thermoent
