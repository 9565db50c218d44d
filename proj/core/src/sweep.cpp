#include "thermoent/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

#include "thermoent/errors.hpp"
#include "thermoent/observables.hpp"

namespace thermoent {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kConcurrenceAgreement = 1e-9;
constexpr double kXDefectLimit = 1e-9;
constexpr double kBookkeepingRelative = 1e-9;
constexpr double kResidualRelative = 1e-10;

void fill_nan(SweepRow& row) {
    row.c_ab = row.c_abc = row.delta_c = kNaN;
    row.q_a = row.q_b = row.q_c = row.q_dep = kNaN;
    row.t_eff_1 = row.t_eff_2 = row.residual = kNaN;
}

// Re-derives the observable invariants for one point; returns a message on violation.
std::string check_invariants(const SystemParams& system, const BathConfig& baths, const SweepRow& row) {
    const Liouvillian l = build_liouvillian(system, baths);
    const SteadyState ss = steady_state(l);
    const DensityMatrix rho_free = to_free_basis(ss.rho, l.eigensystem);

    if (x_structure_defect(rho_free.matrix()) > kXDefectLimit) {
        return "invariant: steady state lacks X structure";
    }
    if (std::abs(concurrence_wootters(rho_free) - row.c_abc) > kConcurrenceAgreement) {
        return "invariant: X-formula and general concurrence disagree";
    }
    const double sum = row.q_a + row.q_b + row.q_c + row.q_dep;
    const double scale = std::max({std::abs(row.q_a), std::abs(row.q_b), std::abs(row.q_c),
                                   std::abs(row.q_dep)});
    if (std::abs(sum) > kBookkeepingRelative * scale + 1e-12) {
        return "invariant: heat currents do not sum to zero";
    }
    if (row.residual > kResidualRelative * operator_norm(l.matrix)) {
        return "invariant: steady-state residual above threshold";
    }
    return {};
}

SweepRow evaluate(const SystemParams& system, const BathConfig& baths, bool check) {
    SweepRow row;
    try {
        BathConfig without = baths;
        without.common_enabled = false;
        without.collective_enabled = false;
        row.c_ab = steady_concurrence(system, without);

        const SteadyReport report = analyze(system, baths);
        row.c_abc = report.concurrence;
        row.delta_c = row.c_abc - row.c_ab;
        row.q_a = report.q_a;
        row.q_b = report.q_b;
        row.q_c = report.q_c;
        row.q_dep = report.q_dep;
        row.t_eff_1 = report.t_eff.t1;
        row.t_eff_2 = report.t_eff.t2;
        row.residual = report.residual;
        if (check) {
            row.error = check_invariants(system, baths, row);
        }
    } catch (const Error& e) {
        fill_nan(row);
        row.error = e.what();
    }
    return row;
}

std::vector<std::vector<double>> axis_grids(const ScenarioConfig& cfg) {
    std::vector<std::vector<double>> grids;
    for (const SweepAxis& axis : cfg.axes) {
        grids.push_back(axis.values());
    }
    return grids;
}

}  // namespace

void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& fn) {
    const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) {
            fn(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < n; i = next++) {
                fn(i);
            }
        });
    }
}

SweepRow evaluate_point(const SystemParams& system, const BathConfig& baths) {
    return evaluate(system, baths, false);
}

std::vector<SweepRow> run_scenario(const ScenarioConfig& cfg, const RunOptions& options) {
    cfg.validate();
    if (cfg.mode == RunMode::Ratio) {
        throw ValidationError("mode = ratio configs are run with run_ratio_sweep");
    }
    const auto grids = axis_grids(cfg);
    const std::size_t total = cfg.point_count();
    std::vector<SweepRow> rows(total);

    parallel_for(total, options.threads, [&](std::size_t index) {
        SystemParams system = cfg.system;
        BathConfig baths = cfg.baths;
        std::vector<double> values(grids.size());
        // Row-major: the last axis varies fastest.
        std::size_t rem = index;
        for (std::size_t a = grids.size(); a-- > 0;) {
            values[a] = grids[a][rem % grids[a].size()];
            rem /= grids[a].size();
        }
        for (std::size_t a = 0; a < grids.size(); ++a) {
            apply_axis_value(cfg.axes[a].name, values[a], system, baths);
        }
        const bool check = options.check_stride != 0 && index % options.check_stride == 0;
        rows[index] = evaluate(system, baths, check);
        rows[index].axis_values = std::move(values);
    });
    return rows;
}

std::vector<SweepRow> run_implementation_scenario(const ScenarioConfig& cfg,
                                                  const RunOptions& options) {
    if (!cfg.baths.dephasing_enabled) {
        throw ValidationError("implementation scenario requires dephasing_enabled = true");
    }
    return run_scenario(cfg, options);
}

std::vector<RatioRow> run_ratio_sweep(const ScenarioConfig& cfg, const RunOptions& options) {
    cfg.validate();
    const auto omega_axis =
        std::find_if(cfg.axes.begin(), cfg.axes.end(), [](const SweepAxis& a) { return a.name == AxisName::Omega; });
    if (omega_axis == cfg.axes.end()) {
        throw ValidationError("ratio sweep needs a sweep.omega axis");
    }
    const std::vector<double> omegas = omega_axis->values();
    const double t_max = cfg.ratio.t_max > 0.0 ? cfg.ratio.t_max : 2.0 * cfg.system.eps_mean();
    const int count = cfg.ratio.t_count;
    std::vector<double> temps(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) {
        temps[static_cast<std::size_t>(k)] = t_max * (k + 1) / count;
    }

    struct Cell {
        double diagonal = 0.0;
        double best = 0.0;
        std::string error;
    };
    const std::size_t per_omega = temps.size();
    std::vector<Cell> cells(omegas.size() * per_omega);

    parallel_for(cells.size(), options.threads, [&](std::size_t index) {
        const std::size_t w = index / per_omega;
        const std::size_t k = index % per_omega;
        Cell& cell = cells[index];
        SystemParams system = cfg.system;
        system.omega = omegas[w];
        BathConfig baths = cfg.baths;
        baths.common_enabled = true;
        baths.t_a = baths.t_b = temps[k];
        try {
            for (std::size_t kc = 0; kc <= k; ++kc) {
                baths.t_c = temps[kc];
                const double c = steady_concurrence(system, baths);
                cell.best = std::max(cell.best, c);
                if (kc == k) {
                    cell.diagonal = c;
                }
            }
        } catch (const Error& e) {
            cell.error = e.what();
        }
    });

    std::vector<RatioRow> rows;
    rows.reserve(omegas.size());
    for (std::size_t w = 0; w < omegas.size(); ++w) {
        RatioRow row;
        row.omega = omegas[w];
        row.t_max = t_max;
        row.t_count = count;
        for (std::size_t k = 0; k < per_omega; ++k) {
            const Cell& cell = cells[w * per_omega + k];
            if (!cell.error.empty() && row.error.empty()) {
                row.error = cell.error;
            }
            row.c_eq = std::max(row.c_eq, cell.diagonal);
            row.c_neq = std::max(row.c_neq, cell.best);
        }
        if (!row.error.empty()) {
            row.c_eq = row.c_neq = row.ratio = kNaN;
        } else {
            row.ratio = row.c_eq > 0.0 ? row.c_neq / row.c_eq : kNaN;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace thermoent
