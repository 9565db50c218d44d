#include "thermoent/config.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <sstream>
#include <utility>

#include "thermoent/csv.hpp"
#include "thermoent/errors.hpp"

namespace thermoent {
namespace {

constexpr std::array<std::pair<AxisName, std::string_view>, 6> kAxisKeys{{
    {AxisName::T, "t"},
    {AxisName::TC, "t_c"},
    {AxisName::TA, "t_a"},
    {AxisName::TB, "t_b"},
    {AxisName::DeltaEps, "delta_eps"},
    {AxisName::Omega, "omega"},
}};

constexpr std::array<std::pair<Preset, std::string_view>, 7> kPresetKeys{{
    {Preset::EqHeatmap, "eq_heatmap"},
    {Preset::EqCurves, "eq_curves"},
    {Preset::Ablation, "ablation"},
    {Preset::TeffScan, "teff_scan"},
    {Preset::NeqPoints, "neq_points"},
    {Preset::NeqNoeff, "neq_noeff"},
    {Preset::Implementation, "implementation"},
}};

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_double(std::string_view key, std::string_view text) {
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw ValidationError("invalid number for '" + std::string(key) + "': '" + std::string(text) + "'");
    }
    return value;
}

int parse_int(std::string_view key, std::string_view text) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw ValidationError("invalid integer for '" + std::string(key) + "': '" + std::string(text) + "'");
    }
    return value;
}

bool parse_bool(std::string_view key, std::string_view text) {
    if (text == "true" || text == "1" || text == "yes" || text == "on") {
        return true;
    }
    if (text == "false" || text == "0" || text == "no" || text == "off") {
        return false;
    }
    throw ValidationError("invalid boolean for '" + std::string(key) + "': '" + std::string(text) + "'");
}

SweepAxis& axis_slot(ScenarioConfig& cfg, AxisName name) {
    auto it = std::find_if(cfg.axes.begin(), cfg.axes.end(),
                           [name](const SweepAxis& a) { return a.name == name; });
    if (it != cfg.axes.end()) {
        return *it;
    }
    // count = 0 marks an axis whose fields have not all been given yet.
    cfg.axes.push_back(SweepAxis{name, 0.0, 0.0, 0});
    return cfg.axes.back();
}

void apply_sweep_setting(ScenarioConfig& cfg, std::string_view key, std::string_view value) {
    // sweep.<axis>.<field>
    const std::string_view rest = key.substr(6);
    const auto dot = rest.rfind('.');
    if (dot == std::string_view::npos) {
        throw ValidationError("malformed sweep key '" + std::string(key) + "'");
    }
    const auto name = parse_axis_name(rest.substr(0, dot));
    if (!name) {
        throw ValidationError("unknown sweep axis in '" + std::string(key) +
                              "' (expected t, t_c, t_a, t_b, delta_eps, omega)");
    }
    const std::string_view field = rest.substr(dot + 1);
    SweepAxis& axis = axis_slot(cfg, *name);
    if (field == "start") {
        axis.start = parse_double(key, value);
    } else if (field == "stop") {
        axis.stop = parse_double(key, value);
    } else if (field == "count") {
        axis.count = parse_int(key, value);
        if (axis.count < 1) {
            throw ValidationError("sweep count must be >= 1 for '" + std::string(key) + "'");
        }
    } else if (field == "spacing") {
        if (value != "linear") {
            throw ValidationError("only linear spacing is supported (got '" + std::string(value) + "')");
        }
    } else {
        throw ValidationError("unknown sweep field '" + std::string(field) + "'");
    }
}

}  // namespace

std::string_view axis_key(AxisName name) {
    for (const auto& [axis, key] : kAxisKeys) {
        if (axis == name) {
            return key;
        }
    }
    return "?";
}

std::optional<AxisName> parse_axis_name(std::string_view key) {
    for (const auto& [axis, name] : kAxisKeys) {
        if (name == key) {
            return axis;
        }
    }
    return std::nullopt;
}

std::string_view preset_key(Preset preset) {
    for (const auto& [p, key] : kPresetKeys) {
        if (p == preset) {
            return key;
        }
    }
    return "?";
}

std::optional<Preset> parse_preset_name(std::string_view key) {
    for (const auto& [p, name] : kPresetKeys) {
        if (name == key) {
            return p;
        }
    }
    return std::nullopt;
}

std::vector<double> SweepAxis::values() const {
    std::vector<double> out(static_cast<std::size_t>(std::max(count, 0)));
    if (count == 1) {
        out[0] = start;
        return out;
    }
    const double step = (stop - start) / (count - 1);
    for (int i = 0; i < count; ++i) {
        out[static_cast<std::size_t>(i)] = i + 1 == count ? stop : start + step * i;
    }
    return out;
}

void ScenarioConfig::validate() const {
    if (!(system.eps_a > 0.0) || !(system.eps_b > 0.0)) {
        throw ValidationError("eps_a and eps_b must be positive");
    }
    if (system.omega < 0.0) {
        throw ValidationError("omega must be non-negative");
    }
    baths.validate();
    if (axes.size() > 2) {
        throw ValidationError("at most 2 sweep axes per run");
    }
    for (const SweepAxis& axis : axes) {
        const std::string key(axis_key(axis.name));
        if (axis.count < 1) {
            throw ValidationError("sweep." + key + ".count must be given and >= 1");
        }
        if (axis.start > axis.stop) {
            throw ValidationError("sweep." + key + ": start must not exceed stop");
        }
    }
    if (mode == RunMode::Ratio) {
        if (axes.size() != 1 || axes.front().name != AxisName::Omega) {
            throw ValidationError("mode = ratio needs exactly one sweep axis, omega");
        }
        if (ratio.t_count < 1) {
            throw ValidationError("ratio.t_count must be >= 1");
        }
    }
}

std::size_t ScenarioConfig::point_count() const {
    std::size_t n = 1;
    for (const SweepAxis& axis : axes) {
        n *= static_cast<std::size_t>(std::max(axis.count, 0));
    }
    return n;
}

void apply_setting(ScenarioConfig& cfg, std::string_view key, std::string_view value) {
    if (key.starts_with("sweep.")) {
        apply_sweep_setting(cfg, key, value);
        return;
    }
    if (key == "eps_a") {
        cfg.system.eps_a = parse_double(key, value);
    } else if (key == "eps_b") {
        cfg.system.eps_b = parse_double(key, value);
    } else if (key == "omega") {
        cfg.system.omega = parse_double(key, value);
    } else if (key == "gamma_a") {
        cfg.baths.gamma_a = parse_double(key, value);
    } else if (key == "gamma_b") {
        cfg.baths.gamma_b = parse_double(key, value);
    } else if (key == "gamma_ca") {
        cfg.baths.gamma_ca = parse_double(key, value);
    } else if (key == "gamma_cb") {
        cfg.baths.gamma_cb = parse_double(key, value);
    } else if (key == "t_a") {
        cfg.baths.t_a = parse_double(key, value);
    } else if (key == "t_b") {
        cfg.baths.t_b = parse_double(key, value);
    } else if (key == "t_c") {
        cfg.baths.t_c = parse_double(key, value);
    } else if (key == "dephasing_gamma") {
        cfg.baths.dephasing_gamma = parse_double(key, value);
    } else if (key == "common_enabled") {
        cfg.baths.common_enabled = parse_bool(key, value);
    } else if (key == "collective_enabled") {
        cfg.baths.collective_enabled = parse_bool(key, value);
    } else if (key == "dephasing_enabled") {
        cfg.baths.dephasing_enabled = parse_bool(key, value);
    } else if (key == "preset") {
        const auto preset = parse_preset_name(value);
        if (!preset) {
            throw ValidationError("unknown preset '" + std::string(value) + "'");
        }
        cfg.preset = preset;
    } else if (key == "output") {
        cfg.output = std::string(value);
    } else if (key == "mode") {
        if (value == "grid") {
            cfg.mode = RunMode::Grid;
        } else if (value == "ratio") {
            cfg.mode = RunMode::Ratio;
        } else {
            throw ValidationError("mode must be 'grid' or 'ratio'");
        }
    } else if (key == "ratio.t_max") {
        cfg.ratio.t_max = parse_double(key, value);
    } else if (key == "ratio.t_count") {
        cfg.ratio.t_count = parse_int(key, value);
    } else {
        throw ValidationError("unknown key '" + std::string(key) + "'");
    }
}

ScenarioConfig parse_config(std::string_view text) {
    ScenarioConfig cfg;
    int line_no = 0;
    while (!text.empty()) {
        const auto eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ValidationError("line " + std::to_string(line_no) + ": expected 'key = value'");
        }
        try {
            apply_setting(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
        } catch (const ValidationError& e) {
            throw ValidationError("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    cfg.validate();
    return cfg;
}

ScenarioConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open config '" + path.string() + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) {
        throw IoError("failed reading config '" + path.string() + "'");
    }
    try {
        return parse_config(buffer.str());
    } catch (const ValidationError& e) {
        throw ValidationError(path.string() + ": " + e.what());
    }
}

std::string format_config(const ScenarioConfig& cfg) {
    std::ostringstream out;
    auto num = [&](std::string_view key, double v) { out << key << " = " << format_number(v) << '\n'; };
    auto flag = [&](std::string_view key, bool v) { out << key << " = " << (v ? "true" : "false") << '\n'; };

    if (cfg.preset) {
        out << "preset = " << preset_key(*cfg.preset) << '\n';
    }
    out << "# system\n";
    num("eps_a", cfg.system.eps_a);
    num("eps_b", cfg.system.eps_b);
    num("omega", cfg.system.omega);
    out << "# reservoirs\n";
    num("t_a", cfg.baths.t_a);
    num("t_b", cfg.baths.t_b);
    num("t_c", cfg.baths.t_c);
    num("gamma_a", cfg.baths.gamma_a);
    num("gamma_b", cfg.baths.gamma_b);
    num("gamma_ca", cfg.baths.gamma_ca);
    num("gamma_cb", cfg.baths.gamma_cb);
    num("dephasing_gamma", cfg.baths.dephasing_gamma);
    flag("common_enabled", cfg.baths.common_enabled);
    flag("collective_enabled", cfg.baths.collective_enabled);
    flag("dephasing_enabled", cfg.baths.dephasing_enabled);
    if (!cfg.axes.empty()) {
        out << "# sweep\n";
    }
    for (const SweepAxis& axis : cfg.axes) {
        const std::string prefix = "sweep." + std::string(axis_key(axis.name)) + ".";
        num(prefix + "start", axis.start);
        num(prefix + "stop", axis.stop);
        out << prefix << "count = " << axis.count << '\n';
    }
    if (cfg.mode == RunMode::Ratio) {
        out << "mode = ratio\n";
        num("ratio.t_max", cfg.ratio.t_max);
        out << "ratio.t_count = " << cfg.ratio.t_count << '\n';
    }
    if (!cfg.output.empty()) {
        out << "output = " << cfg.output << '\n';
    }
    return out.str();
}

void apply_axis_value(AxisName name, double value, SystemParams& system, BathConfig& baths) {
    switch (name) {
        case AxisName::T:
            baths.t_a = value;
            baths.t_b = value;
            break;
        case AxisName::TC:
            baths.t_c = value;
            break;
        case AxisName::TA:
            baths.t_a = value;
            break;
        case AxisName::TB:
            baths.t_b = value;
            break;
        case AxisName::DeltaEps:
            system = SystemParams::from_mean_detuning(system.eps_mean(), value, system.omega);
            break;
        case AxisName::Omega:
            system.omega = value;
            break;
    }
}

}  // namespace thermoent
