#include "thermoent/csv.hpp"

#include <cstdio>
#include <fstream>

#include "thermoent/errors.hpp"

namespace thermoent {
namespace {

std::string sanitize(std::string text) {
    for (char& ch : text) {
        if (ch == ',' || ch == '\n' || ch == '\r' || ch == '"') {
            ch = ch == ',' ? ';' : ' ';
        }
    }
    return text;
}

template <typename Writer>
void write_file(const std::filesystem::path& path, Writer&& writer) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open '" + path.string() + "' for writing");
    }
    writer(out);
    out.flush();
    if (!out) {
        throw IoError("failed writing '" + path.string() + "'");
    }
}

}  // namespace

std::string format_number(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.12g", value);
    return buffer;
}

std::string sweep_csv_header(std::span<const SweepAxis> axes) {
    std::string header;
    for (const SweepAxis& axis : axes) {
        header += axis_key(axis.name);
        header += ',';
    }
    header += "c_ab,c_abc,delta_c,q_a,q_b,q_c,q_dep,t_eff_1,t_eff_2,residual,error";
    return header;
}

void write_sweep_csv(std::ostream& out, std::span<const SweepAxis> axes,
                     std::span<const SweepRow> rows) {
    out << sweep_csv_header(axes) << '\n';
    for (const SweepRow& row : rows) {
        for (const double v : row.axis_values) {
            out << format_number(v) << ',';
        }
        for (const double v : {row.c_ab, row.c_abc, row.delta_c, row.q_a, row.q_b, row.q_c, row.q_dep,
                               row.t_eff_1, row.t_eff_2, row.residual}) {
            out << format_number(v) << ',';
        }
        out << sanitize(row.error) << '\n';
    }
}

void emit_csv(std::span<const SweepRow> rows, std::span<const SweepAxis> axes,
              const std::filesystem::path& path) {
    write_file(path, [&](std::ostream& out) { write_sweep_csv(out, axes, rows); });
}

void write_ratio_csv(std::ostream& out, std::span<const RatioRow> rows) {
    out << "omega,c_eq,c_neq,ratio,t_max,t_count,error\n";
    for (const RatioRow& row : rows) {
        out << format_number(row.omega) << ',' << format_number(row.c_eq) << ','
            << format_number(row.c_neq) << ',' << format_number(row.ratio) << ','
            << format_number(row.t_max) << ',' << row.t_count << ',' << sanitize(row.error) << '\n';
    }
}

void emit_ratio_csv(std::span<const RatioRow> rows, const std::filesystem::path& path) {
    write_file(path, [&](std::ostream& out) { write_ratio_csv(out, rows); });
}

}  // namespace thermoent
