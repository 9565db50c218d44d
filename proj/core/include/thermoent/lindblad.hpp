#pragma once

#include "thermoent/model.hpp"
#include "thermoent/types.hpp"

namespace thermoent {

// Temperatures and flat-spectrum damping rates of the three reservoirs plus
// the pure dephasing rate. gamma_ca / gamma_cb are the individual couplings of
// qubits A and B to the common reservoir; the collective rate is derived from
// them as sqrt(gamma_ca * gamma_cb).
struct BathConfig {
    double t_a = 0.0;
    double t_b = 0.0;
    double t_c = 0.0;
    double gamma_a = 0.0;
    double gamma_b = 0.0;
    double gamma_ca = 0.0;
    double gamma_cb = 0.0;
    double dephasing_gamma = 0.0;
    bool common_enabled = false;
    bool collective_enabled = false;
    bool dephasing_enabled = false;

    void validate() const;
    [[nodiscard]] double collective_rate() const;
    /// Largest rate that enters the generator with the current toggles.
    [[nodiscard]] double max_rate() const;
};

// Hermitian, unit-trace, positive semidefinite 4×4 matrix. The constructor
// checks all three properties and throws ValidationError otherwise.
class DensityMatrix {
public:
    static constexpr double kHermiticityTolerance = 1e-10;
    static constexpr double kTraceTolerance = 1e-10;
    static constexpr double kPositivityTolerance = 1e-9;

    explicit DensityMatrix(const ComplexMatrix4& m);

    [[nodiscard]] const ComplexMatrix4& matrix() const { return m_; }
    [[nodiscard]] Complex operator()(int i, int j) const { return m_(i, j); }
    [[nodiscard]] double min_eigenvalue() const;

    /// |ψ⟩⟨ψ| for the k-th basis vector (0-based).
    static DensityMatrix basis_projector(int k);

private:
    ComplexMatrix4 m_;
};

struct DissipatorSet {
    bool bath_a = false;
    bool bath_b = false;
    bool common = false;
    bool collective = false;
    bool dephasing = false;
};

// Individual contributions, kept so that per-reservoir heat currents can be
// evaluated against the same steady state.
struct LiouvillianParts {
    Superoperator coherent = Superoperator::Zero();
    Superoperator bath_a = Superoperator::Zero();
    Superoperator bath_b = Superoperator::Zero();
    Superoperator common = Superoperator::Zero();
    Superoperator dephasing = Superoperator::Zero();
};

/// Generator of ρ̇ = −i[H,ρ] + L_A + L_B + L_C (+ L_dep), in the Ĥ_S eigenbasis.
struct Liouvillian {
    Superoperator matrix = Superoperator::Zero();
    LiouvillianParts parts;
    DissipatorSet included;
    Eigensystem eigensystem;
    double max_rate = 0.0;
    /// Set when 2√(Δε²/4+Ω²) is not at least 10× the largest rate.
    bool secular_warning = false;
};

/// −i(I⊗H − Hᵀ⊗I) for H = diag(E).
Superoperator coherent_generator(const Eigensystem& eig);

/// Superoperator of ρ ↦ 2VρW† − {W†V, ρ}.
Superoperator cross_dissipator(const ComplexMatrix4& v, const ComplexMatrix4& w);

/// Γ Σ_j [(n̄+1)D[V_j] + n̄ D[V_j†]] for one qubit's jump operators at one temperature.
Superoperator dissipator_independent(const JumpOperatorSet& ops, Qubit qubit, double rate,
                                     double temperature);

/// L_C^(A) + L_C^(B) (+ L_C^(AB) when collective_enabled); requires common_enabled.
Superoperator dissipator_common(const JumpOperatorSet& ops, const BathConfig& cfg);

/// γ(D_A ρ D_A† + D_B ρ D_B† − 2ρ) with D_A = σz⊗I, D_B = I⊗σz, rotated by
/// `basis` (identity: free basis; Eigensystem::basis: eigenbasis).
/// sigma_z_sign selects which level carries +1 (+1: |1⟩, −1: |0⟩).
Superoperator dissipator_dephasing(double gamma, const RealMatrix4& basis = RealMatrix4::Identity(),
                                   double sigma_z_sign = 1.0);

Liouvillian build_liouvillian(const SystemParams& params, const BathConfig& cfg);

struct SteadyState {
    DensityMatrix rho;
    /// ‖L vec(ρ)‖₂ after Hermitization and normalization.
    double residual = 0.0;
    /// Second-smallest over largest singular value of L.
    double gap_ratio = 0.0;
};

/// Null space of L via SVD. Throws NonUniqueSteadyStateError when the second
/// smallest singular value is below 1e-8 of the largest, PositivityError
/// when an eigenvalue of ρ falls below −1e-9.
SteadyState steady_state(const Liouvillian& liouvillian);

/// Classic RK4 with a fixed step. Requires dt·‖L‖₂ ≤ kMaxStepNorm; the actual
/// step is t_final / ceil(t_final / dt).
inline constexpr double kMaxStepNorm = 2.5;
DensityMatrix propagate(const Liouvillian& liouvillian, const DensityMatrix& rho0, double t_final,
                        double dt);

/// Operator 2-norm (largest singular value).
double operator_norm(const Superoperator& op);

}  // namespace thermoent
