#pragma once

#include <span>

#include "thermoent/config.hpp"

namespace thermoent {

ScenarioConfig preset_config(Preset preset);

std::span<const Preset> all_presets();

/// Pure dephasing rate from relaxation and Ramsey times: 1/T₂ − 1/(2T₁).
double dephasing_rate_from_times(double t1, double t2);

}  // namespace thermoent
