#pragma once

#include <filesystem>
#include <ostream>
#include <span>
#include <string>

#include "thermoent/config.hpp"
#include "thermoent/sweep.hpp"

namespace thermoent {

/// 12 significant digits ("%.12g").
std::string format_number(double value);

std::string sweep_csv_header(std::span<const SweepAxis> axes);

void write_sweep_csv(std::ostream& out, std::span<const SweepAxis> axes,
                     std::span<const SweepRow> rows);

/// Throws IoError naming the path on failure.
void emit_csv(std::span<const SweepRow> rows, std::span<const SweepAxis> axes,
              const std::filesystem::path& path);

void write_ratio_csv(std::ostream& out, std::span<const RatioRow> rows);
void emit_ratio_csv(std::span<const RatioRow> rows, const std::filesystem::path& path);

}  // namespace thermoent
