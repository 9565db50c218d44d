#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "thermoent/config.hpp"
#include "thermoent/csv.hpp"
#include "thermoent/errors.hpp"
#include "thermoent/observables.hpp"
#include "thermoent/presets.hpp"
#include "thermoent/sweep.hpp"

namespace fs = std::filesystem;
using namespace thermoent;

namespace {

struct Options {
    std::string config;
    std::string output;
    unsigned threads = 1;
    bool quiet = false;
    std::vector<std::string> settings;
    std::string preset_name;
};

ScenarioConfig load(const Options& opt) {
    ScenarioConfig cfg;
    if (!opt.config.empty()) cfg = load_config(opt.config);
    for (const auto& kv : opt.settings) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) throw ValidationError("--set expects key=value, got '" + kv + "'");
        apply_setting(cfg, std::string_view(kv).substr(0, eq), std::string_view(kv).substr(eq + 1));
    }
    return cfg;
}

void warn_secular(const Options& opt, const SteadyReport& r) {
    if (r.secular_warning && !opt.quiet) {
        std::cerr << "warning: coupling rates are not small against the level splitting; "
                     "the secular approximation may be inaccurate\n";
    }
}

// "-" or empty (with no config default) writes to stdout.
template <typename Write>
void write_output(const std::string& path, Write&& write) {
    if (path.empty() || path == "-") {
        write(std::cout);
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    write(out);
    out.flush();
    if (!out) throw IoError("failed writing '" + path + "'");
}

fs::path companion_path(const fs::path& path) {
    fs::path full = path;
    full.replace_extension();
    full += ".full.csv";
    return full;
}

int cmd_steady(const Options& opt) {
    const ScenarioConfig cfg = load(opt);
    cfg.system.validate();
    const SteadyReport r = analyze(cfg.system, cfg.baths);
    warn_secular(opt, r);
    write_output(opt.output, [&](std::ostream& out) {
        out << "concurrence = " << format_number(r.concurrence) << '\n'
            << "q_a = " << format_number(r.q_a) << '\n'
            << "q_b = " << format_number(r.q_b) << '\n'
            << "q_c = " << format_number(r.q_c) << '\n'
            << "q_dep = " << format_number(r.q_dep) << '\n'
            << "t_eff_1 = " << format_number(r.t_eff.t1) << '\n'
            << "t_eff_2 = " << format_number(r.t_eff.t2) << '\n'
            << "residual = " << format_number(r.residual) << '\n';
        static constexpr const char* kLabels[4] = {"11", "10", "01", "00"};
        for (int i = 0; i < 4; ++i) {
            out << "eta_" << kLabels[i] << kLabels[i] << " = " << format_number(r.rho_free(i, i).real())
                << '\n';
        }
        out << "eta_1001_re = " << format_number(r.rho_free(1, 2).real()) << '\n'
            << "eta_1001_im = " << format_number(r.rho_free(1, 2).imag()) << '\n'
            << "secular_warning = " << (r.secular_warning ? "true" : "false") << '\n';
    });
    return 0;
}

int cmd_sweep(const Options& opt) {
    const ScenarioConfig cfg = load(opt);
    cfg.validate();
    const std::string path = opt.output.empty() ? cfg.output : opt.output;
    const RunOptions run{opt.threads == 0 ? 1u : opt.threads, 7};

    if (cfg.mode == RunMode::Ratio) {
        const auto rows = run_ratio_sweep(cfg, run);
        write_output(path, [&](std::ostream& out) { write_ratio_csv(out, rows); });
        return 0;
    }

    const auto rows = cfg.baths.dephasing_enabled ? run_implementation_scenario(cfg, run)
                                                  : run_scenario(cfg, run);
    write_output(path, [&](std::ostream& out) { write_sweep_csv(out, cfg.axes, rows); });

    if (cfg.preset == Preset::Ablation && !path.empty() && path != "-") {
        ScenarioConfig full = cfg;
        full.baths.collective_enabled = true;
        emit_csv(run_scenario(full, run), full.axes, companion_path(path));
    }

    std::size_t failed = 0;
    for (const auto& row : rows) failed += !row.error.empty();
    if (failed > 0 && !opt.quiet) {
        std::cerr << "warning: " << failed << " of " << rows.size() << " points failed (see error column)\n";
    }
    return 0;
}

int cmd_teff(const Options& opt) {
    const ScenarioConfig cfg = load(opt);
    cfg.system.validate();
    cfg.baths.validate();
    const auto t = effective_temperatures(cfg.system, cfg.baths);
    write_output(opt.output, [&](std::ostream& out) {
        out << "omega_1 = " << format_number(diagonalize(cfg.system).omega1) << '\n'
            << "omega_2 = " << format_number(diagonalize(cfg.system).omega2) << '\n'
            << "t_eff_1 = " << format_number(t.t1) << '\n'
            << "t_eff_2 = " << format_number(t.t2) << '\n';
    });
    return 0;
}

int cmd_find_detuning(const Options& opt) {
    const ScenarioConfig cfg = load(opt);
    DetuningQuery q;
    q.t_a = cfg.baths.t_a;
    q.t_b = cfg.baths.t_b;
    q.omega = cfg.system.omega;
    q.eps_mean = cfg.system.eps_mean();
    q.gamma_a = cfg.baths.gamma_a;
    q.gamma_b = cfg.baths.gamma_b;
    const DetuningRoot root = find_thermalization_detuning(q);
    write_output(opt.output, [&](std::ostream& out) {
        out << "delta_eps = " << format_number(root.detuning) << '\n'
            << "t_eff = " << format_number(root.t_eff) << '\n'
            << "mismatch = " << format_number(root.mismatch) << '\n';
    });
    return 0;
}

int cmd_preset(const Options& opt) {
    const auto preset = parse_preset_name(opt.preset_name);
    if (!preset) {
        std::string known;
        for (const Preset p : all_presets()) known += " " + std::string(preset_key(p));
        throw ValidationError("unknown preset '" + opt.preset_name + "' (known:" + known + ")");
    }
    const std::string text = format_config(preset_config(*preset));
    write_output(opt.output, [&](std::ostream& out) { out << text; });
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Steady-state entanglement of two coupled qubits in thermal reservoirs"};
    app.require_subcommand(1);
    Options opt;

    auto common = [&](CLI::App* sub, bool with_config) {
        if (with_config) {
            sub->add_option("--config", opt.config, "key = value scenario file");
            sub->add_option("--set", opt.settings, "override a config key (key=value), repeatable");
        }
        sub->add_option("--output", opt.output, "output path ('-' for stdout)");
        sub->add_flag("--quiet", opt.quiet, "suppress warnings");
    };

    auto* steady = app.add_subcommand("steady", "solve one parameter point");
    common(steady, true);
    auto* sweep = app.add_subcommand("sweep", "run a parameter sweep and write CSV");
    common(sweep, true);
    sweep->add_option("--threads", opt.threads, "worker threads")->check(CLI::PositiveNumber);
    auto* teff = app.add_subcommand("teff", "effective temperatures at the two transition frequencies");
    common(teff, true);
    auto* detune = app.add_subcommand("find-detuning", "detuning at which both effective temperatures agree");
    common(detune, true);
    auto* preset = app.add_subcommand("preset", "write a preset scenario config");
    common(preset, false);
    preset->add_option("name", opt.preset_name, "preset name")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (*steady) return cmd_steady(opt);
        if (*sweep) return cmd_sweep(opt);
        if (*teff) return cmd_teff(opt);
        if (*detune) return cmd_find_detuning(opt);
        if (*preset) return cmd_preset(opt);
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const SolverError& e) {
        std::cerr << "solver error: " << e.what() << '\n';
        return 2;
    } catch (const IoError& e) {
        std::cerr << "i/o error: " << e.what() << '\n';
        return 3;
    }
    return 0;
}
