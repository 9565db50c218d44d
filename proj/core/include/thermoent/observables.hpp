#pragma once

#include <optional>
#include <span>

#include "thermoent/lindblad.hpp"
#include "thermoent/model.hpp"

namespace thermoent {

/// basisᵀ · ρ · basis: eigenbasis density matrix to free-basis components η_{ii'}.
DensityMatrix to_free_basis(const DensityMatrix& rho_eigen, const Eigensystem& eig);

/// Largest modulus over entries outside the diagonal and the (2,3)/(3,2) pair.
double x_structure_defect(const ComplexMatrix4& rho_free);

/// C = 2 max{0, |η₂₃| − √(η₁₁η₄₄)} clamped to [0, 1]. Throws StructureError
/// when entries outside the X pattern exceed kXTolerance.
inline constexpr double kXTolerance = 1e-8;
double concurrence_x(const DensityMatrix& rho_free);

/// General two-qubit concurrence from the spectrum of ρ (σy⊗σy) ρ* (σy⊗σy).
double concurrence_wootters(const DensityMatrix& rho);

/// Tr{L_part(ρ) H}; the energy flow out of the reservoir represented by
/// L_part (positive: the reservoir releases heat). H must be expressed in the
/// same basis as ρ and L_part.
double heat_current(const Superoperator& part, const DensityMatrix& rho_s,
                    const RealMatrix4& hamiltonian);

// Downward (Γ⁻) and upward (Γ⁺) transition rates between eigenstates at ω₁
// and ω₂ induced by the two independent baths.
struct TransitionRates {
    double down1 = 0.0;
    double up1 = 0.0;
    double down2 = 0.0;
    double up2 = 0.0;
};

struct EffectiveTemperatures {
    double t1 = 0.0;  // at ω₁
    double t2 = 0.0;  // at ω₂
};

TransitionRates effective_rates(const SystemParams& params, const BathConfig& cfg);

/// ω_j / ln(Γ_j⁻/Γ_j⁺) from the independent baths only; 0 where Γ_j⁺ = 0.
EffectiveTemperatures effective_temperatures(const SystemParams& params, const BathConfig& cfg);

struct DetuningQuery {
    double t_a = 0.0;
    double t_b = 0.0;
    double omega = 0.0;
    double eps_mean = 0.0;
    double gamma_a = 1.0;
    double gamma_b = 1.0;
    /// Samples used to bracket the first sign change on (0, Δε_max].
    int scan_points = 400;
    double tolerance = 1e-10;
};

struct DetuningRoot {
    double detuning = 0.0;
    double t_eff = 0.0;
    /// |T_eff(ω₁) − T_eff(ω₂)| at the returned detuning.
    double mismatch = 0.0;
    double interval_hi = 0.0;
};

/// Smallest positive Δε at which T_eff(ω₁) = T_eff(ω₂), by bracketing scan plus bisection.
DetuningRoot find_thermalization_detuning(const DetuningQuery& query);

struct SteadyReport {
    DensityMatrix rho_eigen;
    DensityMatrix rho_free;
    double concurrence = 0.0;
    double q_a = 0.0;
    double q_b = 0.0;
    double q_c = 0.0;
    double q_dep = 0.0;
    EffectiveTemperatures t_eff;
    double residual = 0.0;
    bool secular_warning = false;
};

/// Build the generator, solve for the steady state and evaluate every observable.
SteadyReport analyze(const SystemParams& params, const BathConfig& cfg);

/// Concurrence of the steady state only (skips heat currents).
double steady_concurrence(const SystemParams& params, const BathConfig& cfg);

/// Largest T_C on `t_c_grid` for which attaching the common bath increases the
/// steady-state concurrence by more than `threshold`; nullopt if none does.
std::optional<double> enhancement_bound(const SystemParams& params, const BathConfig& cfg,
                                        std::span<const double> t_c_grid, double threshold = 1e-10);

}  // namespace thermoent
