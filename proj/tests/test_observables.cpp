#include <doctest.h>

#include <random>
#include <vector>

#include "oracles.hpp"
#include "thermoent/errors.hpp"
#include "thermoent/observables.hpp"

using namespace thermoent;

namespace {

BathConfig unit_baths(double t_a, double t_b, double t_c) {
    BathConfig cfg;
    cfg.t_a = t_a;
    cfg.t_b = t_b;
    cfg.t_c = t_c;
    cfg.gamma_a = cfg.gamma_b = cfg.gamma_ca = cfg.gamma_cb = 1.0;
    cfg.common_enabled = cfg.collective_enabled = true;
    return cfg;
}

DensityMatrix diagonal_state(double p1, double p2, double p3, double p4) {
    ComplexMatrix4 m = ComplexMatrix4::Zero();
    m.diagonal() << p1, p2, p3, p4;
    return DensityMatrix(m);
}

DensityMatrix bell_state() {
    ComplexMatrix4 m = ComplexMatrix4::Zero();
    m(1, 1) = m(2, 2) = 0.5;
    m(1, 2) = m(2, 1) = -0.5;
    return DensityMatrix(m);
}

}  // namespace

TEST_SUITE("observables") {

TEST_CASE("free basis transform") {
    const Eigensystem eig = diagonalize({20.0, 20.0, 10.0});
    const DensityMatrix ground = to_free_basis(DensityMatrix::basis_projector(3), eig);
    CHECK(ground.matrix().isApprox(DensityMatrix::basis_projector(3).matrix()));

    const DensityMatrix free = to_free_basis(diagonal_state(0.1, 0.2, 0.3, 0.4), eig);
    CHECK(free(1, 2).real() == doctest::Approx((0.2 - 0.3) / 2).epsilon(1e-14));

    // Closed-form Gibbs populations at T = 10 with E = (40, 30, 10, 0).
    const double z = std::exp(-4.0) + std::exp(-3.0) + std::exp(-1.0) + 1.0;
    const DensityMatrix gibbs =
        diagonal_state(std::exp(-4.0) / z, std::exp(-3.0) / z, std::exp(-1.0) / z, 1.0 / z);
    const DensityMatrix eta = to_free_basis(gibbs, eig);
    CHECK(std::abs(eta(1, 2).real() + 0.110758) < 1e-5);
    CHECK(std::abs(eta(0, 0).real() - 0.012755) < 1e-5);
    CHECK(std::abs(eta(3, 3).real() - 0.696388) < 1e-5);
}

TEST_CASE("free basis transform matches the closed-form relations for any angle") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        const SystemParams params = SystemParams::from_mean_detuning(20.0, 8.0 * u(rng) - 4.0, 0.5 + 8.0 * u(rng));
        const Eigensystem eig = diagonalize(params);
        Eigen::Vector4d p(u(rng), u(rng), u(rng), u(rng));
        p /= p.sum();
        const DensityMatrix eta = to_free_basis(diagonal_state(p(0), p(1), p(2), p(3)), eig);
        const double c2 = std::pow(std::cos(eig.theta / 2), 2);
        const double s2 = std::pow(std::sin(eig.theta / 2), 2);
        CHECK(eta(0, 0).real() == doctest::Approx(p(0)));
        CHECK(eta(1, 1).real() == doctest::Approx(c2 * p(1) + s2 * p(2)));
        CHECK(eta(2, 2).real() == doctest::Approx(s2 * p(1) + c2 * p(2)));
        CHECK(eta(3, 3).real() == doctest::Approx(p(3)));
        CHECK(eta(1, 2).real() == doctest::Approx(0.5 * std::sin(eig.theta) * (p(1) - p(2))));
        CHECK(eta(2, 1).real() == doctest::Approx(eta(1, 2).real()));
    }
}

TEST_CASE("X-state concurrence") {
    CHECK(concurrence_x(bell_state()) == doctest::Approx(1.0));
    CHECK(concurrence_x(DensityMatrix::basis_projector(3)) == 0.0);

    const double z = std::exp(-4.0) + std::exp(-3.0) + std::exp(-1.0) + 1.0;
    const DensityMatrix eta = to_free_basis(
        diagonal_state(std::exp(-4.0) / z, std::exp(-3.0) / z, std::exp(-1.0) / z, 1.0 / z),
        diagonalize({20.0, 20.0, 10.0}));
    CHECK(std::abs(concurrence_x(eta) - 0.03302) < 1e-4);

    ComplexMatrix4 not_x = ComplexMatrix4::Identity() / 4.0;
    not_x(0, 1) = not_x(1, 0) = 0.05;
    CHECK_THROWS_AS(concurrence_x(DensityMatrix(not_x)), StructureError);
}

TEST_CASE("general concurrence") {
    CHECK(concurrence_wootters(bell_state()) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(concurrence_wootters(DensityMatrix(ComplexMatrix4::Identity() / 4.0)) == 0.0);

    // Product states ρ_A ⊗ ρ_B.
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 50; ++trial) {
        auto qubit = [&] {
            Eigen::Matrix2cd g = Eigen::Matrix2cd::Random();
            Eigen::Matrix2cd r = g * g.adjoint();
            return Eigen::Matrix2cd(r / r.trace());
        };
        const Eigen::Matrix2cd a = qubit();
        const Eigen::Matrix2cd b = qubit();
        ComplexMatrix4 product;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) product.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
        CHECK(concurrence_wootters(DensityMatrix(0.5 * (product + product.adjoint()))) < 1e-7);
    }

    // Two independent routes to the same spectrum.
    for (int trial = 0; trial < 200; ++trial) {
        const ComplexMatrix4 rho = oracle::random_density(rng);
        CHECK(concurrence_wootters(DensityMatrix(rho)) ==
              doctest::Approx(oracle::wootters_direct(rho)).epsilon(1e-7));
    }
}

TEST_CASE("property: X formula equals the general concurrence on X states") {
    std::mt19937_64 rng(1000);
    int entangled = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const DensityMatrix rho(oracle::random_x_state(rng));
        const double cx = concurrence_x(rho);
        CHECK(std::abs(cx - concurrence_wootters(rho)) <= 1e-9);
        entangled += cx > 0.0;
    }
    CHECK(entangled > 100);
}

TEST_CASE("heat currents at global equilibrium vanish") {
    const SteadyReport report = analyze({21.0, 19.0, 6.0}, unit_baths(4, 4, 4));
    CHECK(std::abs(report.q_a) <= 1e-10);
    CHECK(std::abs(report.q_b) <= 1e-10);
    CHECK(std::abs(report.q_c) <= 1e-10);
    CHECK(report.q_dep == 0.0);
}

TEST_CASE("property: heat bookkeeping") {
    std::mt19937_64 rng(314);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        const SystemParams params = SystemParams::from_mean_detuning(20.0, 6.0 * u(rng) - 3.0, 1.0 + 9.0 * u(rng));
        BathConfig cfg = unit_baths(12 * u(rng), 12 * u(rng), 12 * u(rng));
        cfg.gamma_a = 0.2 + u(rng);
        cfg.gamma_cb = 0.2 + u(rng);
        cfg.dephasing_enabled = trial % 2 == 1;
        cfg.dephasing_gamma = cfg.dephasing_enabled ? 0.3 * u(rng) : 0.0;
        const SteadyReport r = analyze(params, cfg);
        const double scale = std::max({std::abs(r.q_a), std::abs(r.q_b), std::abs(r.q_c), std::abs(r.q_dep)});
        CHECK(std::abs(r.q_a + r.q_b + r.q_c + r.q_dep) <= 1e-9 * scale);
        CHECK(r.concurrence >= 0.0);
        CHECK(r.concurrence <= 1.0);
        CHECK(x_structure_defect(r.rho_free.matrix()) <= 1e-9);
        CHECK(std::abs(concurrence_wootters(r.rho_free) - r.concurrence) <= 1e-9);
    }
}

TEST_CASE("common bath colder than the qubits absorbs heat") {
    const SystemParams params{20.0, 20.0, 6.0};
    CHECK(analyze(params, unit_baths(5, 5, 3)).q_c < 0.0);
    CHECK(analyze(params, unit_baths(3, 3, 5)).q_c > 0.0);
    CHECK(std::abs(analyze(params, unit_baths(4, 4, 4)).q_c) < 1e-10);
}

TEST_CASE("property: A/B exchange symmetry") {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 30; ++trial) {
        const SystemParams params = SystemParams::from_mean_detuning(20.0, 6.0 * u(rng) - 3.0, 1.0 + 9.0 * u(rng));
        BathConfig cfg = unit_baths(10 * u(rng), 10 * u(rng), 10 * u(rng));
        cfg.gamma_a = 0.2 + u(rng);
        cfg.gamma_b = 0.2 + u(rng);
        cfg.gamma_ca = 0.2 + u(rng);
        cfg.gamma_cb = 0.2 + u(rng);
        BathConfig swapped = cfg;
        std::swap(swapped.t_a, swapped.t_b);
        std::swap(swapped.gamma_a, swapped.gamma_b);
        std::swap(swapped.gamma_ca, swapped.gamma_cb);
        const SteadyReport r1 = analyze(params, cfg);
        const SteadyReport r2 = analyze({params.eps_b, params.eps_a, params.omega}, swapped);
        CHECK(std::abs(r1.concurrence - r2.concurrence) <= 1e-9);
        CHECK(std::abs(r1.q_a - r2.q_b) <= 1e-9);
        CHECK(std::abs(r1.q_b - r2.q_a) <= 1e-9);
        CHECK(std::abs(r1.q_c - r2.q_c) <= 1e-9);
    }
}

TEST_CASE("effective temperatures") {
    BathConfig cfg = unit_baths(6, 6, 0);
    const auto equal = effective_temperatures(SystemParams::from_mean_detuning(20, 1.7, 6), cfg);
    CHECK(equal.t1 == doctest::Approx(6.0).epsilon(1e-12));
    CHECK(equal.t2 == doctest::Approx(6.0).epsilon(1e-12));

    cfg.t_a = 5;
    cfg.t_b = 8;
    const auto fig_a = effective_temperatures(SystemParams::from_mean_detuning(20, 3, 6), cfg);
    CHECK(std::abs(fig_a.t1 - 6.97) <= 0.01);
    CHECK(std::abs(fig_a.t2 - 6.51) <= 0.01);

    cfg.t_a = 2;
    const auto fig_d = effective_temperatures(SystemParams::from_mean_detuning(20, 3, 6), cfg);
    CHECK(std::abs(fig_d.t1 - 6.48) <= 0.01);
    CHECK(std::abs(fig_d.t2 - 6.20) <= 0.01);

    // Common bath does not enter.
    cfg.t_c = 0.1;
    cfg.gamma_ca = 9.0;
    const auto with_common = effective_temperatures(SystemParams::from_mean_detuning(20, 3, 6), cfg);
    CHECK(with_common.t1 == fig_d.t1);

    cfg.t_a = cfg.t_b = 0.0;
    const auto frozen = effective_temperatures(SystemParams::from_mean_detuning(20, 3, 6), cfg);
    CHECK(frozen.t1 == 0.0);
    CHECK(frozen.t2 == 0.0);
}

TEST_CASE("property: effective temperatures lie between the bath temperatures") {
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        BathConfig cfg = unit_baths(0.5 + 10 * u(rng), 0.5 + 10 * u(rng), 0);
        cfg.gamma_a = 0.1 + u(rng);
        cfg.gamma_b = 0.1 + u(rng);
        const auto params = SystemParams::from_mean_detuning(20, 8 * u(rng) - 4, 0.5 + 9 * u(rng));
        const auto t = effective_temperatures(params, cfg);
        const double lo = std::min(cfg.t_a, cfg.t_b) - 1e-12;
        const double hi = std::max(cfg.t_a, cfg.t_b) + 1e-12;
        CHECK(t.t1 >= lo);
        CHECK(t.t1 <= hi);
        CHECK(t.t2 >= lo);
        CHECK(t.t2 <= hi);
    }
}

TEST_CASE("thermalization detuning") {
    DetuningQuery q;
    q.t_a = 5;
    q.t_b = 8;
    q.omega = 6;
    q.eps_mean = 20;
    const DetuningRoot root = find_thermalization_detuning(q);
    CHECK(std::abs(root.detuning - 0.95) <= 0.02);
    CHECK(root.mismatch <= 1e-6);
    CHECK(root.t_eff > 5.0);
    CHECK(root.t_eff < 8.0);

    q.t_a = 2;
    CHECK(std::abs(find_thermalization_detuning(q).detuning - 2.08) <= 0.02);

    q.t_a = 8;
    CHECK_THROWS_AS(find_thermalization_detuning(q), ValidationError);

    // Hotter A: the crossing sits at negative detuning, outside the search interval.
    q.t_a = 12;
    CHECK_THROWS_AS(find_thermalization_detuning(q), NoRootError);

    q.t_a = 5;
    q.gamma_b = 0.0;
    CHECK_THROWS_AS(find_thermalization_detuning(q), ValidationError);
}

TEST_CASE("enhancement bound scan") {
    // Equilibrium: the bound sits right below T.
    const SystemParams params{20.0, 20.0, 10.0};
    std::vector<double> grid;
    for (int i = 1; i <= 40; ++i) grid.push_back(0.25 * i);
    const auto bound = enhancement_bound(params, unit_baths(6, 6, 0), grid);
    REQUIRE(bound.has_value());
    CHECK(*bound == doctest::Approx(5.75));

    CHECK_FALSE(enhancement_bound(params, unit_baths(6, 6, 0), std::vector<double>{8.0, 9.0}).has_value());
}

}
