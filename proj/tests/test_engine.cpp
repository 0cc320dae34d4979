#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "krylov/core/eigensystem.hpp"
#include "krylov/core/operator_space.hpp"
#include "krylov/engine/complexity.hpp"
#include "krylov/engine/floquet_arnoldi.hpp"
#include "krylov/engine/gap_lanczos.hpp"
#include "krylov/engine/lanczos.hpp"
#include "krylov/engine/late_time.hpp"
#include "krylov/engine/statistics.hpp"
#include "krylov/models/cue.hpp"
#include "krylov/models/rmte.hpp"
#include "krylov/models/rng.hpp"
#include "krylov/models/tfim.hpp"

using namespace krylov;
using models::RngStream;

namespace {

Matrix pauli_x() { return (Matrix(2, 2) << 0, 1, 1, 0).finished(); }
Matrix pauli_z() { return (Matrix(2, 2) << 1, 0, 0, -1).finished(); }

Matrix random_hermitian(int d, RngStream& rng) {
    Matrix m(d, d);
    for (int c = 0; c < d; ++c)
        for (int r = 0; r < d; ++r) m(r, c) = cxd(rng.gaussian(), rng.gaussian());
    return (m + m.adjoint()) / 2.0;
}

StateVector random_state(int d, RngStream& rng) {
    Vector v(d);
    for (int k = 0; k < d; ++k) v(k) = cxd(rng.gaussian(), rng.gaussian());
    return StateVector(std::move(v));
}

} // namespace

TEST_CASE("lanczos: H = sigma_x on |0> gives a = (0,0), b = (1)") {
    const DenseOperator h = DenseOperator::hermitian(pauli_x());
    const auto res = lanczos_state(h, StateVector::basis_state(2, 0));
    REQUIRE(res.coeffs.a.size() == 2);
    REQUIRE(res.coeffs.b.size() == 1);
    CHECK(std::abs(res.coeffs.a(0)) < 1e-14);
    CHECK(std::abs(res.coeffs.a(1)) < 1e-14);
    CHECK(res.coeffs.b(0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(res.coeffs.termination == Termination::space_exhausted);
    // basis is {|0>, |1>}
    CHECK(std::abs(res.basis.vectors(0, 0) - 1.0) < 1e-14);
    CHECK(std::abs(res.basis.vectors(1, 1)) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("lanczos: sigma_z Liouvillian on sigma_x has b1 = 2, Krylov dim 2") {
    const DenseOperator h = DenseOperator::hermitian(pauli_z());
    const DenseOperator seed(pauli_x());
    const auto res = lanczos_operator(h, seed);
    CHECK(res.basis.size() == 2);
    REQUIRE(res.coeffs.b.size() == 1);
    CHECK(res.coeffs.b(0) == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(std::abs(res.coeffs.a(0)) < 1e-13);
}

TEST_CASE("lanczos: eigenvector seed breaks down at dimension 1") {
    RngStream rng(21, 0, "test.lz.eig");
    const Matrix h = random_hermitian(6, rng);
    const Eigensystem es = eigensystem(DenseOperator::hermitian(h), SpectrumKind::hermitian);
    const auto res = lanczos(
        [&h](const Vector& v) -> Vector { return h * v; }, Vector(es.vectors.col(2)));
    CHECK(res.basis.size() == 1);
    CHECK(res.coeffs.termination == Termination::breakdown);
    CHECK(res.coeffs.b.size() == 0);
}

TEST_CASE("lanczos: zero seed is rejected") {
    CHECK_THROWS_AS(lanczos([](const Vector& v) -> Vector { return v; }, Vector(Vector::Zero(4))),
                    degenerate_input);
}

TEST_CASE("lanczos: plain recurrence agrees with reorthogonalized while orthogonal") {
    // The plain three-term recurrence tracks the reorthogonalized one until
    // Ritz convergence destroys orthogonality; at small dims no loss occurs
    // and the full (a, b) sequences agree. Past that the warning flag fires.
    for (const int d : {8, 16, 24}) {
        RngStream rng(22, static_cast<uint64_t>(d), "test.lz.reorth");
        const DenseOperator hop = DenseOperator::hermitian(random_hermitian(d, rng));
        const StateVector seed = random_state(d, rng);
        const auto full = lanczos_state(hop, seed, KrylovOptions{.reorthogonalize = true});
        const auto plain = lanczos_state(hop, seed, KrylovOptions{.reorthogonalize = false});
        REQUIRE(full.basis.size() == plain.basis.size());
        CHECK_FALSE(plain.coeffs.orthogonality_warning);
        CHECK((full.coeffs.a - plain.coeffs.a).cwiseAbs().maxCoeff() < 1e-8);
        CHECK((full.coeffs.b - plain.coeffs.b).cwiseAbs().maxCoeff() < 1e-8);
    }
    // dim 48: orthogonality is lost mid-run and the contract reports it
    RngStream rng(22, 48, "test.lz.reorth");
    const DenseOperator hop = DenseOperator::hermitian(random_hermitian(48, rng));
    const auto plain =
        lanczos_state(hop, random_state(48, rng), KrylovOptions{.reorthogonalize = false});
    CHECK(plain.coeffs.orthogonality_warning);
}

TEST_CASE("lanczos vs Arnoldi: tridiagonal matches the Hessenberg on Hermitian maps") {
    // Dual route: the full-orthogonalization Arnoldi of a Hermitian map must
    // produce a Hessenberg whose diagonal/subdiagonal are the Lanczos (a, b).
    for (const int d : {16, 48, 64}) {
        RngStream rng(24, static_cast<uint64_t>(d), "test.lz.arnoldi");
        const Matrix h = random_hermitian(d, rng);
        const StateVector seed = random_state(d, rng);
        const auto lz = lanczos_state(DenseOperator::hermitian(h), seed);
        const auto ar = floquet_arnoldi([&h](const Vector& v) -> Vector { return h * v; },
                                        seed.amplitudes());
        REQUIRE(lz.basis.size() == ar.basis.size());
        const RealVector sub = arnoldi_subdiagonal(ar.coeffs);
        REQUIRE(sub.size() == lz.coeffs.b.size());
        CHECK((sub - lz.coeffs.b).cwiseAbs().maxCoeff() < 1e-8);
        for (int n = 0; n < lz.basis.size(); ++n)
            CHECK(std::abs(ar.coeffs.h(n, n).real() - lz.coeffs.a(n)) < 1e-8);
    }
}

TEST_CASE("lanczos: max_iter cap reports max_iter termination") {
    RngStream rng(23, 0, "test.lz.cap");
    const Matrix h = random_hermitian(20, rng);
    const auto res = lanczos([&h](const Vector& v) -> Vector { return h * v; },
                             random_state(20, rng).amplitudes(), KrylovOptions{.max_iter = 5});
    CHECK(res.basis.size() == 5);
    CHECK(res.coeffs.termination == Termination::max_iter);
}

TEST_CASE("floquet_arnoldi: diagonal U with basis-state seed closes at dim 1") {
    Matrix u = Matrix::Zero(3, 3);
    u(0, 0) = std::polar(1.0, 0.4);
    u(1, 1) = std::polar(1.0, 1.3);
    u(2, 2) = std::polar(1.0, 2.2);
    const auto res = floquet_arnoldi_state(DenseOperator::unitary(u), StateVector::basis_state(3, 1));
    CHECK(res.basis.size() == 1);
    CHECK(res.coeffs.termination == Termination::breakdown);
}

TEST_CASE("floquet_arnoldi: RMTE uniform superposition reaches the full space") {
    const models::RmteSpec spec{.d = 5, .epsilon = 1.0, .seed = 99};
    const DenseOperator u = models::rmte_unitary(spec);
    const Eigensystem es = eigensystem(u, SpectrumKind::unitary);
    Vector uniform = Vector::Zero(25);
    for (int k = 0; k < 25; ++k) uniform += es.vectors.col(k);
    const StateVector seed(uniform);

    // oracle: rank of the stroboscopic orbit Gram matrix
    Matrix orbit(25, 25);
    Vector psi = seed.amplitudes();
    for (int j = 0; j < 25; ++j) {
        orbit.col(j) = psi;
        psi = u.mat() * psi;
    }
    Eigen::JacobiSVD<Matrix> svd(orbit);
    int rank = 0;
    for (int k = 0; k < 25; ++k)
        if (svd.singularValues()(k) > 1e-8 * svd.singularValues()(0)) ++rank;
    REQUIRE(rank == 25);

    const auto res = floquet_arnoldi_state(u, seed);
    CHECK(res.basis.size() == 25);
    CHECK(res.coeffs.termination == Termination::space_exhausted);
    CHECK(res.basis.max_offdiagonal_overlap() < 1e-8);
    // subdiagonal real non-negative by the phase gauge
    const RealVector sub = arnoldi_subdiagonal(res.coeffs);
    for (Eigen::Index k = 0; k < sub.size(); ++k) CHECK(sub(k) >= 0.0);
}

TEST_CASE("complexity_series_floquet: eigenstate seed stays at zero") {
    const models::RmteSpec spec{.d = 3, .epsilon = 1.0, .seed = 5};
    const DenseOperator u = models::rmte_unitary(spec);
    const Eigensystem es = eigensystem(u, SpectrumKind::unitary);

    const StateVector eigstate{Vector(es.vectors.col(4))};
    const auto res = floquet_arnoldi_state(u, eigstate);
    const auto series = complexity_series_floquet_state(u, eigstate, res.basis, 50);
    CHECK(series.values(0) == 0.0);
    CHECK(series.values.cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("complexity_series_floquet: amplitudes normalized, stored when asked") {
    RngStream rng(25, 0, "test.series");
    const models::RmteSpec spec{.d = 4, .epsilon = 0.7, .seed = 17};
    const DenseOperator u = models::rmte_unitary(spec);
    const StateVector seed = random_state(16, rng);
    const auto res = floquet_arnoldi_state(u, seed);
    const auto series = complexity_series_floquet_state(u, seed, res.basis, 200, true);
    REQUIRE(series.amplitudes.cols() == 201);
    for (int j = 0; j <= 200; ++j)
        CHECK(std::abs(series.amplitudes.col(j).sum() - 1.0) < 1e-8);
    CHECK(series.values.minCoeff() >= 0.0);
    CHECK(series.values.maxCoeff() <= res.basis.size() - 1.0);
}

TEST_CASE("complexity_series_floquet: stored basis matches recomputation with U^j") {
    RngStream rng(26, 0, "test.invariance");
    const models::RmteSpec spec{.d = 4, .epsilon = 1.0, .seed = 31};
    const DenseOperator u = models::rmte_unitary(spec);
    const StateVector seed = random_state(16, rng);
    const auto res = floquet_arnoldi_state(u, seed);
    const auto series = complexity_series_floquet_state(u, seed, res.basis, 64);

    for (int j = 0; j <= 64; j += 16) {
        Matrix uj = Matrix::Identity(16, 16);
        for (int k = 0; k < j; ++k) uj = u.mat() * uj;
        const Vector psi = uj * seed.amplitudes();
        const Vector amps = res.basis.vectors.adjoint() * psi;
        double kc = 0.0;
        for (Eigen::Index n = 1; n < amps.size(); ++n) kc += double(n) * std::norm(amps(n));
        CHECK(std::abs(kc - series.values(j)) < 1e-8);
    }
}

TEST_CASE("complexity_series_floquet: mismatched seed/basis rejected") {
    const models::RmteSpec spec{.d = 3, .epsilon = 1.0, .seed = 7};
    const DenseOperator u = models::rmte_unitary(spec);
    RngStream rng(27, 0, "test.mismatch");
    const StateVector s1 = random_state(9, rng);
    const StateVector s2 = random_state(9, rng);
    const auto res = floquet_arnoldi_state(u, s1);
    CHECK_THROWS_AS(complexity_series_floquet_state(u, s2, res.basis, 10), std::invalid_argument);
}

TEST_CASE("complexity_series_hamiltonian: H = sigma_z, seed sigma_x gives sin^2(2t)") {
    const DenseOperator h = DenseOperator::hermitian(pauli_z());
    const DenseOperator seed(pauli_x());
    const auto res = lanczos_operator(h, seed);
    RealVector times(100);
    for (int k = 0; k < 100; ++k) times(k) = 0.08 * k;
    const auto series = complexity_series_hamiltonian(h, seed, res.basis, times);
    for (int k = 0; k < 100; ++k) {
        const double expect = std::pow(std::sin(2.0 * times(k)), 2);
        CHECK(std::abs(series.values(k) - expect) < 1e-10);
    }
}

TEST_CASE("late_time_complexity: eigenstate seed gives zero") {
    const models::RmteSpec spec{.d = 3, .epsilon = 1.0, .seed = 13};
    const DenseOperator u = models::rmte_unitary(spec);
    const Eigensystem es = eigensystem(u, SpectrumKind::unitary);
    const StateVector seed{Vector(es.vectors.col(0))};
    const auto res = floquet_arnoldi_state(u, seed);
    CHECK(late_time_complexity(es, seed, res.basis) < 1e-12);
}

TEST_CASE("late_time_complexity: matches the long-run average for RMTE") {
    RngStream rng(28, 0, "test.latetime");
    const models::RmteSpec spec{.d = 5, .epsilon = 1.0, .seed = 101};
    const DenseOperator u = models::rmte_unitary(spec);
    const Eigensystem es = eigensystem(u, SpectrumKind::unitary);
    const StateVector seed = random_state(25, rng); // generically low IPR
    const auto res = floquet_arnoldi_state(u, seed);
    const auto series = complexity_series_floquet_state(u, seed, res.basis, 1000);
    const double avg = windowed_average(series, 200, 1000);
    const double prediction = late_time_complexity(es, seed, res.basis);
    CHECK(std::abs(prediction - avg) < 0.05 * std::abs(avg));
}

TEST_CASE("arnoldi_subdiag_variance: constant and two-point sequences") {
    RecurrenceCoefficients c;
    c.h = Matrix::Zero(4, 4);
    c.h(1, 0) = 1.5;
    c.h(2, 1) = 1.5;
    c.h(3, 2) = 1.5;
    CHECK(arnoldi_subdiag_variance(c) == doctest::Approx(0.0));

    RecurrenceCoefficients c2;
    c2.h = Matrix::Zero(3, 3);
    c2.h(1, 0) = 0.0;
    c2.h(2, 1) = 2.0;
    CHECK(arnoldi_subdiag_variance(c2) == doctest::Approx(1.0));

    RecurrenceCoefficients c3;
    c3.h = Matrix::Zero(2, 2);
    c3.h(1, 0) = 1.0;
    CHECK_THROWS_AS(arnoldi_subdiag_variance(c3), degenerate_input);
}

TEST_CASE("variance_identity_check: eigenstate, sigma_x seed, and random pairs") {
    const DenseOperator sx = DenseOperator::hermitian(pauli_x());
    const auto [var0, b0] = variance_identity_check(
        sx, StateVector{Vector((Vector(2) << 1, 1).finished())}); // eigenstate of sigma_x
    CHECK(std::abs(var0) < 1e-12);
    CHECK(std::abs(b0) < 1e-12);

    const auto [var1, b1] = variance_identity_check(sx, StateVector::basis_state(2, 0));
    CHECK(var1 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(b1 == doctest::Approx(1.0).epsilon(1e-12));

    RngStream rng(29, 0, "test.varid");
    for (int trial = 0; trial < 20; ++trial) {
        const DenseOperator h = DenseOperator::hermitian(random_hermitian(20, rng));
        const StateVector psi = random_state(20, rng);
        const auto [var, b2] = variance_identity_check(h, psi);
        CHECK(std::abs(var - b2) < 1e-10 * std::max(1.0, var));
    }
}

TEST_CASE("gap_lanczos: reproduces the generic operator Lanczos route") {
    RngStream rng(30, 0, "test.gap");
    const int d = 6;
    const DenseOperator h = DenseOperator::hermitian(random_hermitian(d, rng));
    const DenseOperator seed(random_hermitian(d, rng));

    const auto generic = lanczos_operator(h, seed);
    const Eigensystem es = eigensystem(h, SpectrumKind::hermitian);
    const auto reduced = gap_lanczos(es, seed);

    REQUIRE(reduced.size() == generic.basis.size());
    CHECK((reduced.a - generic.coeffs.a).cwiseAbs().maxCoeff() < 1e-8);
    CHECK((reduced.b - generic.coeffs.b).cwiseAbs().maxCoeff() < 1e-8);

    RealVector times(40);
    for (int k = 0; k < 40; ++k) times(k) = 0.15 * k;
    const auto s_generic = complexity_series_hamiltonian(es, seed, generic.basis, times);
    const auto s_reduced = complexity_series_gap(reduced, times);
    CHECK((s_generic.values - s_reduced.values).cwiseAbs().maxCoeff() < 1e-8);

    // expanded Krylov operators match the generic basis elementwise up to sign
    for (int n = 0; n < reduced.size(); ++n) {
        const Matrix expanded = gap_krylov_operator(reduced, n).mat();
        const Matrix direct = generic.basis.operator_element(n).mat();
        const double diff_plus = (expanded - direct).cwiseAbs().maxCoeff();
        const double diff_minus = (expanded + direct).cwiseAbs().maxCoeff();
        CHECK(std::min(diff_plus, diff_minus) < 1e-7);
    }
}

TEST_CASE("gap_lanczos: TFIM positive-parity sector agrees with the generic route") {
    const models::TfimSpec spec{.L = 3, .J = 1.0, .hx = 1.0, .hz = 0.4};
    const DenseOperator h_full = models::tfim_hamiltonian(spec);
    const Matrix v = models::parity_sector(spec.L);
    const DenseOperator h = models::project_positive_parity(h_full, v);
    const DenseOperator sz =
        models::project_positive_parity(models::collective_operator(spec.L, models::Axis::z), v);

    const auto generic = lanczos_operator(h, sz);
    const Eigensystem es = eigensystem(h, SpectrumKind::hermitian);
    const auto reduced = gap_lanczos(es, sz);

    REQUIRE(reduced.size() == generic.basis.size());
    CHECK((reduced.a - generic.coeffs.a).cwiseAbs().maxCoeff() < 1e-8);
    CHECK((reduced.b - generic.coeffs.b).cwiseAbs().maxCoeff() < 1e-8);

    RealVector times(60);
    for (int k = 0; k < 60; ++k) times(k) = 0.25 * k;
    const auto s1 = complexity_series_hamiltonian(es, sz, generic.basis, times);
    const auto s2 = complexity_series_gap(reduced, times);
    CHECK((s1.values - s2.values).cwiseAbs().maxCoeff() < 1e-8);
}
