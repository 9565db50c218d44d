#include "thermoent/model.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "thermoent/errors.hpp"

namespace thermoent {

double SystemParams::half_splitting() const {
    const double half_detuning = 0.5 * detuning();
    return std::sqrt(half_detuning * half_detuning + omega * omega);
}

SystemParams SystemParams::from_mean_detuning(double eps_mean, double detuning, double omega) {
    return SystemParams{eps_mean + 0.5 * detuning, eps_mean - 0.5 * detuning, omega};
}

void SystemParams::validate() const {
    if (!std::isfinite(eps_a) || !std::isfinite(eps_b) || !std::isfinite(omega)) {
        throw ValidationError("system parameters must be finite");
    }
    if (eps_a <= 0.0 || eps_b <= 0.0) {
        throw ValidationError("qubit gaps eps_a and eps_b must be positive");
    }
    if (omega < 0.0) {
        throw ValidationError("coupling omega must be non-negative");
    }
    if (eps_mean() - half_splitting() <= 0.0) {
        throw NegativeFrequencyError(
            "negative transition frequency: sqrt(delta_eps^2/4 + omega^2) = " +
            std::to_string(half_splitting()) + " >= eps_m = " + std::to_string(eps_mean()));
    }
}

RealMatrix4 Eigensystem::hamiltonian() const {
    return Eigen::Vector4d(energies[0], energies[1], energies[2], energies[3]).asDiagonal();
}

RealMatrix4 build_hamiltonian(const SystemParams& params) {
    params.validate();
    RealMatrix4 h = RealMatrix4::Zero();
    h(0, 0) = params.eps_a + params.eps_b;
    h(1, 1) = params.eps_a;
    h(2, 2) = params.eps_b;
    h(1, 2) = params.omega;
    h(2, 1) = params.omega;
    return h;
}

Eigensystem diagonalize(const SystemParams& params) {
    params.validate();
    if (params.omega == 0.0 && params.detuning() == 0.0) {
        throw DegenerateSpectrumError(
            "degenerate spectrum: omega = 0 and delta_eps = 0 leave the mixing angle undefined");
    }

    Eigensystem eig;
    // atan2 keeps θ in (0, π) for Ω > 0, so sin θ > 0.
    eig.theta = std::atan2(2.0 * params.omega, params.detuning());

    const double root = params.half_splitting();
    const double mean = params.eps_mean();
    eig.energies = {params.eps_a + params.eps_b, mean + root, mean - root, 0.0};
    eig.omega1 = mean - root;
    eig.omega2 = mean + root;

    const double c = std::cos(0.5 * eig.theta);
    const double s = std::sin(0.5 * eig.theta);
    eig.basis << 1.0, 0.0, 0.0, 0.0,
                 0.0,   c,   s, 0.0,
                 0.0,  -s,   c, 0.0,
                 0.0, 0.0, 0.0, 1.0;
    return eig;
}

JumpOperatorSet jump_operators(const Eigensystem& eig) {
    const double c = std::cos(0.5 * eig.theta);
    const double s = std::sin(0.5 * eig.theta);

    // ket_bra(i, k) = |λ_i⟩⟨λ_k| with 1-based labels.
    auto ket_bra = [](int i, int k) {
        RealMatrix4 m = RealMatrix4::Zero();
        m(i - 1, k - 1) = 1.0;
        return m;
    };

    JumpOperatorSet set;
    set.ops[0] = s * (ket_bra(2, 1) - ket_bra(4, 3));   // V_{A,1}
    set.ops[1] = c * (ket_bra(3, 1) + ket_bra(4, 2));   // V_{A,2}
    set.ops[2] = c * (ket_bra(2, 1) + ket_bra(4, 3));   // V_{B,1}
    set.ops[3] = s * (-ket_bra(3, 1) + ket_bra(4, 2));  // V_{B,2}
    set.frequencies = {eig.omega1, eig.omega2};
    return set;
}

double bose_occupation(double omega, double temperature) {
    if (!(omega > 0.0)) {
        throw DomainError("Bose-Einstein occupation requires omega > 0, got " + std::to_string(omega));
    }
    if (temperature < 0.0 || std::isnan(temperature)) {
        throw DomainError("temperature must be non-negative");
    }
    if (temperature == 0.0) {
        return 0.0;
    }
    const double x = omega / temperature;
    // exp overflows just above 709.78; the occupation is below 1e-300 there anyway.
    if (x > std::log(std::numeric_limits<double>::max())) {
        return 0.0;
    }
    return 1.0 / std::expm1(x);
}

}  // namespace thermoent
