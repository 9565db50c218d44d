#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "thermoent/lindblad.hpp"
#include "thermoent/model.hpp"

namespace thermoent {

enum class AxisName { T, TC, TA, TB, DeltaEps, Omega };

std::string_view axis_key(AxisName name);
std::optional<AxisName> parse_axis_name(std::string_view key);

// Linear grid start, start + h, ..., stop with `count` points (count = 1 gives {start}).
struct SweepAxis {
    AxisName name = AxisName::T;
    double start = 0.0;
    double stop = 0.0;
    int count = 1;

    [[nodiscard]] std::vector<double> values() const;
};

enum class Preset { EqHeatmap, EqCurves, Ablation, TeffScan, NeqPoints, NeqNoeff, Implementation };

std::string_view preset_key(Preset preset);
std::optional<Preset> parse_preset_name(std::string_view key);

enum class RunMode { Grid, Ratio };

// Maximization grid for the equilibrium / non-equilibrium ratio sweep.
// t_max <= 0 means "2 ε_m".
struct RatioGrid {
    double t_max = 0.0;
    int t_count = 40;
};

struct ScenarioConfig {
    SystemParams system;
    BathConfig baths;
    std::vector<SweepAxis> axes;  // declaration order
    std::string output;
    std::optional<Preset> preset;
    RunMode mode = RunMode::Grid;
    RatioGrid ratio;

    /// Structural checks only; per-point physics errors are reported per row.
    void validate() const;
    [[nodiscard]] std::size_t point_count() const;
};

/// Apply one `key = value` setting. Unknown keys and malformed values throw ValidationError.
void apply_setting(ScenarioConfig& cfg, std::string_view key, std::string_view value);

/// Flat key = value text, '#' starts a comment. Errors carry the line number.
ScenarioConfig parse_config(std::string_view text);
ScenarioConfig load_config(const std::filesystem::path& path);

/// Inverse of parse_config (round-trips every field).
std::string format_config(const ScenarioConfig& cfg);

/// Apply one axis value at a grid point. `t` sets both t_a and t_b;
/// `delta_eps` keeps ε_m fixed.
void apply_axis_value(AxisName name, double value, SystemParams& system, BathConfig& baths);

}  // namespace thermoent
