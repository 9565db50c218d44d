#include "thermoent/lindblad.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "thermoent/errors.hpp"

namespace thermoent {
namespace {

constexpr double kSecularMargin = 10.0;
constexpr double kUniquenessRatio = 1e-8;
constexpr double kTraceDriftLimit = 1e-6;

Superoperator kron(const ComplexMatrix4& a, const ComplexMatrix4& b) {
    Superoperator out;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            out.block<4, 4>(4 * i, 4 * j) = a(i, j) * b;
        }
    }
    return out;
}

ComplexMatrix4 to_complex(const RealMatrix4& m) { return m.cast<Complex>(); }

// One emission/absorption pair of the factor-2 Lindblad form for the cross
// channel (v, w) at occupation n:
//   (n+1)(2 v ρ w† − {w† v, ρ}) + n (2 v† ρ w − {w v†, ρ}).
Superoperator thermal_pair(const RealMatrix4& v, const RealMatrix4& w, double occupation) {
    const ComplexMatrix4 vc = to_complex(v);
    const ComplexMatrix4 wc = to_complex(w);
    return (occupation + 1.0) * cross_dissipator(vc, wc) +
           occupation * cross_dissipator(vc.adjoint(), wc.adjoint());
}

void require_non_negative(double value, const char* name) {
    if (!(value >= 0.0) || !std::isfinite(value)) {
        throw ValidationError(std::string(name) + " must be finite and non-negative");
    }
}

}  // namespace

void BathConfig::validate() const {
    require_non_negative(t_a, "t_a");
    require_non_negative(t_b, "t_b");
    require_non_negative(t_c, "t_c");
    require_non_negative(gamma_a, "gamma_a");
    require_non_negative(gamma_b, "gamma_b");
    require_non_negative(gamma_ca, "gamma_ca");
    require_non_negative(gamma_cb, "gamma_cb");
    require_non_negative(dephasing_gamma, "dephasing_gamma");
    if (collective_enabled && !common_enabled) {
        throw ValidationError("collective_enabled requires common_enabled");
    }
}

double BathConfig::collective_rate() const { return std::sqrt(gamma_ca * gamma_cb); }

double BathConfig::max_rate() const {
    double rate = std::max(gamma_a, gamma_b);
    if (common_enabled) {
        rate = std::max({rate, gamma_ca, gamma_cb});
    }
    if (dephasing_enabled) {
        rate = std::max(rate, dephasing_gamma);
    }
    return rate;
}

DensityMatrix::DensityMatrix(const ComplexMatrix4& m) : m_(m) {
    const double hermiticity = (m_ - m_.adjoint()).cwiseAbs().maxCoeff();
    if (!(hermiticity <= kHermiticityTolerance)) {
        throw ValidationError("density matrix is not Hermitian (defect " +
                              std::to_string(hermiticity) + ")");
    }
    if (!(std::abs(m_.trace() - 1.0) <= kTraceTolerance)) {
        throw ValidationError("density matrix trace differs from 1");
    }
    if (!(min_eigenvalue() >= -kPositivityTolerance)) {
        throw ValidationError("density matrix has a negative eigenvalue");
    }
}

double DensityMatrix::min_eigenvalue() const {
    const ComplexMatrix4 hermitian = 0.5 * (m_ + m_.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix4> solver(hermitian, Eigen::EigenvaluesOnly);
    return solver.eigenvalues()(0);
}

DensityMatrix DensityMatrix::basis_projector(int k) {
    ComplexMatrix4 m = ComplexMatrix4::Zero();
    m(k, k) = 1.0;
    return DensityMatrix(m);
}

Superoperator coherent_generator(const Eigensystem& eig) {
    const ComplexMatrix4 h = to_complex(eig.hamiltonian());
    const ComplexMatrix4 id = ComplexMatrix4::Identity();
    return Complex(0.0, -1.0) * (kron(id, h) - kron(h.transpose(), id));
}

Superoperator cross_dissipator(const ComplexMatrix4& v, const ComplexMatrix4& w) {
    const ComplexMatrix4 id = ComplexMatrix4::Identity();
    const ComplexMatrix4 wv = w.adjoint() * v;
    return 2.0 * kron(w.conjugate(), v) - kron(id, wv) - kron(wv.transpose(), id);
}

Superoperator dissipator_independent(const JumpOperatorSet& ops, Qubit qubit, double rate,
                                     double temperature) {
    require_non_negative(rate, "rate");
    require_non_negative(temperature, "temperature");
    Superoperator out = Superoperator::Zero();
    if (rate == 0.0) {
        return out;
    }
    for (int j = 1; j <= 2; ++j) {
        const RealMatrix4& v = ops.get(qubit, j);
        out += rate * thermal_pair(v, v, bose_occupation(ops.frequency(j), temperature));
    }
    return out;
}

Superoperator dissipator_common(const JumpOperatorSet& ops, const BathConfig& cfg) {
    if (!cfg.common_enabled) {
        throw ValidationError("dissipator_common called with common_enabled = false");
    }
    cfg.validate();
    Superoperator out = dissipator_independent(ops, Qubit::A, cfg.gamma_ca, cfg.t_c) +
                        dissipator_independent(ops, Qubit::B, cfg.gamma_cb, cfg.t_c);
    const double collective = cfg.collective_rate();
    if (!cfg.collective_enabled || collective == 0.0) {
        return out;
    }
    for (int j = 1; j <= 2; ++j) {
        const RealMatrix4& va = ops.get(Qubit::A, j);
        const RealMatrix4& vb = ops.get(Qubit::B, j);
        const double n = bose_occupation(ops.frequency(j), cfg.t_c);
        out += collective * (thermal_pair(va, vb, n) + thermal_pair(vb, va, n));
    }
    return out;
}

Superoperator dissipator_dephasing(double gamma, const RealMatrix4& basis, double sigma_z_sign) {
    require_non_negative(gamma, "dephasing gamma");
    if (gamma == 0.0) {
        return Superoperator::Zero();
    }
    const double s = sigma_z_sign;
    // Free basis |11⟩, |10⟩, |01⟩, |00⟩.
    const RealMatrix4 d_a = Eigen::Vector4d(s, s, -s, -s).asDiagonal();
    const RealMatrix4 d_b = Eigen::Vector4d(s, -s, s, -s).asDiagonal();
    const ComplexMatrix4 ra = to_complex(basis * d_a * basis.transpose());
    const ComplexMatrix4 rb = to_complex(basis * d_b * basis.transpose());
    // vec(D ρ D†) = (D̄ ⊗ D) vec(ρ).
    return gamma * (kron(ra.conjugate(), ra) + kron(rb.conjugate(), rb) -
                    2.0 * Superoperator::Identity());
}

Liouvillian build_liouvillian(const SystemParams& params, const BathConfig& cfg) {
    cfg.validate();
    Liouvillian out;
    out.eigensystem = diagonalize(params);
    const JumpOperatorSet ops = jump_operators(out.eigensystem);

    LiouvillianParts& parts = out.parts;
    parts.coherent = coherent_generator(out.eigensystem);
    parts.bath_a = dissipator_independent(ops, Qubit::A, cfg.gamma_a, cfg.t_a);
    parts.bath_b = dissipator_independent(ops, Qubit::B, cfg.gamma_b, cfg.t_b);
    if (cfg.dephasing_enabled) {
        parts.dephasing = dissipator_dephasing(cfg.dephasing_gamma, out.eigensystem.basis);
    }
    if (cfg.common_enabled) {
        parts.common = dissipator_common(ops, cfg);
    }

    // The common bath is added last so that dropping it is an exact subtraction.
    out.matrix = parts.coherent;
    out.matrix += parts.bath_a;
    out.matrix += parts.bath_b;
    out.matrix += parts.dephasing;
    out.matrix += parts.common;

    out.included = DissipatorSet{
        cfg.gamma_a > 0.0,
        cfg.gamma_b > 0.0,
        cfg.common_enabled,
        cfg.common_enabled && cfg.collective_enabled,
        cfg.dephasing_enabled && cfg.dephasing_gamma > 0.0,
    };
    out.max_rate = cfg.max_rate();
    out.secular_warning = 2.0 * params.half_splitting() < kSecularMargin * out.max_rate;
    return out;
}

SteadyState steady_state(const Liouvillian& liouvillian) {
    if (!(liouvillian.max_rate > 0.0)) {
        throw ValidationError("steady state requires at least one positive dissipation rate");
    }
    const Eigen::JacobiSVD<Superoperator> svd(liouvillian.matrix, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double largest = sv(0);
    const double gap_ratio = sv(14) / largest;
    if (!(gap_ratio > kUniquenessRatio)) {
        throw NonUniqueSteadyStateError("steady state is not unique: second-smallest singular value " +
                                        std::to_string(sv(14)) + " vs largest " +
                                        std::to_string(largest));
    }

    ComplexMatrix4 rho = unvectorize(svd.matrixV().col(15));
    rho /= rho.trace();
    rho = 0.5 * (rho + rho.adjoint()).eval();
    rho /= rho.trace().real();

    Eigen::SelfAdjointEigenSolver<ComplexMatrix4> spectrum(rho, Eigen::EigenvaluesOnly);
    const double min_eig = spectrum.eigenvalues()(0);
    if (min_eig < -DensityMatrix::kPositivityTolerance) {
        throw PositivityError("steady state has negative eigenvalue " + std::to_string(min_eig));
    }

    const double residual = (liouvillian.matrix * vectorize(rho)).norm();
    return SteadyState{DensityMatrix(rho), residual, gap_ratio};
}

double operator_norm(const Superoperator& op) {
    const Eigen::JacobiSVD<Superoperator> svd(op);
    return svd.singularValues()(0);
}

DensityMatrix propagate(const Liouvillian& liouvillian, const DensityMatrix& rho0, double t_final,
                        double dt) {
    if (!(dt > 0.0) || !(t_final >= 0.0)) {
        throw ValidationError("propagate requires dt > 0 and t_final >= 0");
    }
    if (t_final == 0.0) {
        return rho0;
    }
    const Superoperator& l = liouvillian.matrix;
    const double norm = operator_norm(l);
    if (dt * norm > kMaxStepNorm) {
        throw StepSizeError("dt * ||L|| = " + std::to_string(dt * norm) + " exceeds " +
                            std::to_string(kMaxStepNorm) + "; use dt <= " +
                            std::to_string(kMaxStepNorm / norm));
    }

    const auto steps = static_cast<long>(std::ceil(t_final / dt));
    const double h = t_final / static_cast<double>(steps);
    SuperVector x = vectorize(rho0.matrix());
    for (long step = 0; step < steps; ++step) {
        const SuperVector k1 = l * x;
        const SuperVector k2 = l * (x + 0.5 * h * k1);
        const SuperVector k3 = l * (x + 0.5 * h * k2);
        const SuperVector k4 = l * (x + h * k3);
        x += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

        const Complex trace = x(0) + x(5) + x(10) + x(15);
        if (std::abs(trace - 1.0) > kTraceDriftLimit) {
            throw StepSizeError("trace drift " + std::to_string(std::abs(trace - 1.0)) +
                                " at step " + std::to_string(step) + "; use a smaller dt");
        }
    }
    return DensityMatrix(unvectorize(x));
}

}  // namespace thermoent
