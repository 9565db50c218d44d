#include "thermoent/observables.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "thermoent/errors.hpp"

namespace thermoent {
namespace {

constexpr double kImaginaryTolerance = 1e-10;

bool in_x_pattern(int i, int j) { return i == j || (i == 1 && j == 2) || (i == 2 && j == 1); }

ComplexMatrix4 sigma_y_sigma_y() {
    // σy⊗σy is anti-diagonal (−1, 1, 1, −1) in both |00⟩-first and |11⟩-first orderings.
    ComplexMatrix4 m = ComplexMatrix4::Zero();
    m(0, 3) = -1.0;
    m(1, 2) = 1.0;
    m(2, 1) = 1.0;
    m(3, 0) = -1.0;
    return m;
}

double effective_temperature(double omega, double down, double up) {
    if (up <= 0.0) {
        return 0.0;
    }
    return omega / std::log(down / up);
}

}  // namespace

DensityMatrix to_free_basis(const DensityMatrix& rho_eigen, const Eigensystem& eig) {
    const ComplexMatrix4 u = eig.basis.cast<Complex>();
    return DensityMatrix(u.transpose() * rho_eigen.matrix() * u);
}

double x_structure_defect(const ComplexMatrix4& rho_free) {
    double defect = 0.0;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            if (!in_x_pattern(i, j)) {
                defect = std::max(defect, std::abs(rho_free(i, j)));
            }
        }
    }
    return defect;
}

double concurrence_x(const DensityMatrix& rho_free) {
    const double defect = x_structure_defect(rho_free.matrix());
    if (defect > kXTolerance) {
        throw StructureError("state lacks X structure (off-pattern entry " + std::to_string(defect) +
                             "); use concurrence_wootters");
    }
    const double eta11 = std::max(0.0, rho_free(0, 0).real());
    const double eta44 = std::max(0.0, rho_free(3, 3).real());
    const double value = 2.0 * (std::abs(rho_free(1, 2)) - std::sqrt(eta11 * eta44));
    return std::clamp(value, 0.0, 1.0);
}

double concurrence_wootters(const DensityMatrix& rho) {
    // The spectrum of ρρ̃ equals that of √ρ ρ̃ √ρ, which is Hermitian PSD.
    const ComplexMatrix4& m = rho.matrix();
    Eigen::SelfAdjointEigenSolver<ComplexMatrix4> decomposition(m);
    const Eigen::Vector4d clipped = decomposition.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    const ComplexMatrix4 root = decomposition.eigenvectors() * clipped.cast<Complex>().asDiagonal() *
                                decomposition.eigenvectors().adjoint();

    const ComplexMatrix4 yy = sigma_y_sigma_y();
    const ComplexMatrix4 flipped = yy * m.conjugate() * yy;
    const ComplexMatrix4 product = root * flipped * root;
    Eigen::SelfAdjointEigenSolver<ComplexMatrix4> spectrum(0.5 * (product + product.adjoint()),
                                                           Eigen::EigenvaluesOnly);
    // Ascending order: index 3 is the largest.
    std::array<double, 4> mu{};
    for (int k = 0; k < 4; ++k) {
        mu[k] = std::sqrt(std::max(0.0, spectrum.eigenvalues()(k)));
    }
    return std::max(0.0, mu[3] - mu[2] - mu[1] - mu[0]);
}

double heat_current(const Superoperator& part, const DensityMatrix& rho_s,
                    const RealMatrix4& hamiltonian) {
    const Complex value = (apply(part, rho_s.matrix()) * hamiltonian.cast<Complex>()).trace();
    if (std::abs(value.imag()) > kImaginaryTolerance * std::max(1.0, std::abs(value.real()))) {
        throw SolverError("heat current has imaginary part " + std::to_string(value.imag()));
    }
    return value.real();
}

TransitionRates effective_rates(const SystemParams& params, const BathConfig& cfg) {
    const Eigensystem eig = diagonalize(params);
    const double s2 = std::pow(std::sin(0.5 * eig.theta), 2);
    const double c2 = std::pow(std::cos(0.5 * eig.theta), 2);

    const double na1 = bose_occupation(eig.omega1, cfg.t_a);
    const double nb1 = bose_occupation(eig.omega1, cfg.t_b);
    const double na2 = bose_occupation(eig.omega2, cfg.t_a);
    const double nb2 = bose_occupation(eig.omega2, cfg.t_b);

    TransitionRates rates;
    rates.down1 = s2 * cfg.gamma_a * (na1 + 1.0) + c2 * cfg.gamma_b * (nb1 + 1.0);
    rates.up1 = s2 * cfg.gamma_a * na1 + c2 * cfg.gamma_b * nb1;
    rates.down2 = c2 * cfg.gamma_a * (na2 + 1.0) + s2 * cfg.gamma_b * (nb2 + 1.0);
    rates.up2 = c2 * cfg.gamma_a * na2 + s2 * cfg.gamma_b * nb2;
    return rates;
}

EffectiveTemperatures effective_temperatures(const SystemParams& params, const BathConfig& cfg) {
    const Eigensystem eig = diagonalize(params);
    const TransitionRates rates = effective_rates(params, cfg);
    return {effective_temperature(eig.omega1, rates.down1, rates.up1),
            effective_temperature(eig.omega2, rates.down2, rates.up2)};
}

DetuningRoot find_thermalization_detuning(const DetuningQuery& query) {
    if (query.t_a == query.t_b) {
        throw ValidationError("t_a == t_b: already thermal for every detuning");
    }
    if (!(query.t_a > 0.0) || !(query.t_b > 0.0)) {
        throw ValidationError("find_thermalization_detuning requires positive t_a and t_b");
    }
    if (!(query.eps_mean > query.omega) || query.omega < 0.0) {
        throw ValidationError("need eps_m > omega >= 0 for a positive transition frequency");
    }
    if (!(query.gamma_a > 0.0) || !(query.gamma_b > 0.0)) {
        throw ValidationError("find_thermalization_detuning requires positive gamma_a and gamma_b");
    }
    if (query.scan_points < 2) {
        throw ValidationError("scan_points must be at least 2");
    }

    BathConfig baths;
    baths.t_a = query.t_a;
    baths.t_b = query.t_b;
    baths.gamma_a = query.gamma_a;
    baths.gamma_b = query.gamma_b;

    auto mismatch = [&](double detuning) {
        const auto params = SystemParams::from_mean_detuning(query.eps_mean, detuning, query.omega);
        const EffectiveTemperatures t = effective_temperatures(params, baths);
        return t.t1 - t.t2;
    };

    // ω₁ > 0 ⇔ Δε < 2√(ε_m² − Ω²); stay a hair inside so ω₁ never reaches 0.
    const double limit = 2.0 * std::sqrt(query.eps_mean * query.eps_mean - query.omega * query.omega);
    const double hi_end = limit * (1.0 - 1e-9);
    const double step = hi_end / query.scan_points;

    double lo = step;
    double g_lo = mismatch(lo);
    bool bracketed = g_lo == 0.0;
    double hi = lo;
    for (int k = 2; k <= query.scan_points && !bracketed; ++k) {
        hi = step * k;
        const double g_hi = mismatch(hi);
        if (g_hi == 0.0 || std::signbit(g_hi) != std::signbit(g_lo)) {
            bracketed = true;
            if (g_hi == 0.0) {
                lo = hi;
                g_lo = 0.0;
            }
            break;
        }
        lo = hi;
        g_lo = g_hi;
    }
    if (!bracketed) {
        throw NoRootError("no sign change of T_eff(w1) - T_eff(w2) on (0, " + std::to_string(hi_end) +
                          "]");
    }

    if (g_lo != 0.0) {
        while (hi - lo > query.tolerance) {
            const double mid = 0.5 * (lo + hi);
            const double g_mid = mismatch(mid);
            if (g_mid == 0.0) {
                lo = hi = mid;
                break;
            }
            if (std::signbit(g_mid) == std::signbit(g_lo)) {
                lo = mid;
                g_lo = g_mid;
            } else {
                hi = mid;
            }
        }
    }

    const double root = 0.5 * (lo + hi);
    const auto params = SystemParams::from_mean_detuning(query.eps_mean, root, query.omega);
    const EffectiveTemperatures t = effective_temperatures(params, baths);
    return DetuningRoot{root, 0.5 * (t.t1 + t.t2), std::abs(t.t1 - t.t2), hi_end};
}

SteadyReport analyze(const SystemParams& params, const BathConfig& cfg) {
    const Liouvillian l = build_liouvillian(params, cfg);
    const SteadyState ss = steady_state(l);
    const DensityMatrix rho_free = to_free_basis(ss.rho, l.eigensystem);
    const RealMatrix4 h = l.eigensystem.hamiltonian();

    SteadyReport report{ss.rho, rho_free, 0.0, 0.0, 0.0, 0.0, 0.0, {}, 0.0, false};
    report.concurrence = concurrence_x(rho_free);
    report.q_a = heat_current(l.parts.bath_a, ss.rho, h);
    report.q_b = heat_current(l.parts.bath_b, ss.rho, h);
    report.q_c = heat_current(l.parts.common, ss.rho, h);
    report.q_dep = heat_current(l.parts.dephasing, ss.rho, h);
    report.t_eff = effective_temperatures(params, cfg);
    report.residual = ss.residual;
    report.secular_warning = l.secular_warning;
    return report;
}

double steady_concurrence(const SystemParams& params, const BathConfig& cfg) {
    const Liouvillian l = build_liouvillian(params, cfg);
    const SteadyState ss = steady_state(l);
    return concurrence_x(to_free_basis(ss.rho, l.eigensystem));
}

std::optional<double> enhancement_bound(const SystemParams& params, const BathConfig& cfg,
                                        std::span<const double> t_c_grid, double threshold) {
    BathConfig without = cfg;
    without.common_enabled = false;
    without.collective_enabled = false;
    const double c_ab = steady_concurrence(params, without);

    BathConfig with = cfg;
    with.common_enabled = true;
    std::optional<double> bound;
    for (const double t_c : t_c_grid) {
        with.t_c = t_c;
        if (steady_concurrence(params, with) - c_ab > threshold) {
            bound = bound ? std::max(*bound, t_c) : t_c;
        }
    }
    return bound;
}

}  // namespace thermoent
