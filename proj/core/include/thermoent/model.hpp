#pragma once

#include <array>

#include "thermoent/types.hpp"

namespace thermoent {

// Two qubits A, B with gaps eps_a, eps_b and flip-flop coupling omega.
// Free basis ordering is |η₁⟩=|11⟩, |η₂⟩=|10⟩, |η₃⟩=|01⟩, |η₄⟩=|00⟩
// (first label qubit A). Units: ħ = k_B = 1.
struct SystemParams {
    double eps_a = 0.0;
    double eps_b = 0.0;
    double omega = 0.0;

    [[nodiscard]] double eps_mean() const { return 0.5 * (eps_a + eps_b); }
    [[nodiscard]] double detuning() const { return eps_a - eps_b; }
    /// √(Δε²/4 + Ω²), half the splitting of the single-excitation doublet.
    [[nodiscard]] double half_splitting() const;

    static SystemParams from_mean_detuning(double eps_mean, double detuning, double omega);

    /// Throws ValidationError (or NegativeFrequencyError) on invalid input.
    void validate() const;
};

struct Eigensystem {
    double theta = 0.0;
    std::array<double, 4> energies{};
    double omega1 = 0.0;
    double omega2 = 0.0;
    /// Row i holds ⟨λ_i| in free-basis components: eigen amplitudes = basis · free amplitudes.
    RealMatrix4 basis = RealMatrix4::Identity();

    /// Ĥ_S in its own eigenbasis, diag(E₁..E₄).
    [[nodiscard]] RealMatrix4 hamiltonian() const;
    [[nodiscard]] double frequency(int j) const { return j == 1 ? omega1 : omega2; }
};

enum class Qubit { A, B };

// V_{μ,j} in the eigenbasis, j ∈ {1, 2}.
struct JumpOperatorSet {
    std::array<RealMatrix4, 4> ops{};
    std::array<double, 2> frequencies{};

    [[nodiscard]] const RealMatrix4& get(Qubit qubit, int j) const {
        return ops[(qubit == Qubit::A ? 0 : 2) + (j - 1)];
    }
    [[nodiscard]] double frequency(int j) const { return frequencies[j - 1]; }
};

RealMatrix4 build_hamiltonian(const SystemParams& params);

Eigensystem diagonalize(const SystemParams& params);

JumpOperatorSet jump_operators(const Eigensystem& eig);

/// Bose-Einstein occupation 1/(exp(ω/T) − 1); exactly 0 at T = 0.
double bose_occupation(double omega, double temperature);

}  // namespace thermoent
