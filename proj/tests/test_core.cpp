#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>

#include "krylov/core/density.hpp"
#include "krylov/core/eigensystem.hpp"
#include "krylov/core/operator_space.hpp"
#include "krylov/core/rotation.hpp"
#include "krylov/core/spin.hpp"
#include "krylov/core/tensor.hpp"
#include "krylov/models/rng.hpp"

using namespace krylov;
using models::RngStream;

namespace {

Matrix random_matrix(int d, RngStream& rng) {
    Matrix m(d, d);
    for (int c = 0; c < d; ++c)
        for (int r = 0; r < d; ++r) m(r, c) = cxd(rng.gaussian(), rng.gaussian());
    return m;
}

Matrix random_hermitian(int d, RngStream& rng) {
    const Matrix m = random_matrix(d, rng);
    return (m + m.adjoint()) / 2.0;
}

Matrix pauli_x() { return (Matrix(2, 2) << 0, 1, 1, 0).finished(); }
Matrix pauli_y() {
    const cxd i(0, 1);
    return (Matrix(2, 2) << 0, -i, i, 0).finished();
}
Matrix pauli_z() { return (Matrix(2, 2) << 1, 0, 0, -1).finished(); }

} // namespace

TEST_CASE("spin_operators: j = 1/2 gives Pauli matrices over 2") {
    const SpinSystem s = spin_operators(0.5);
    CHECK(s.dim == 2);
    CHECK((s.Jz.mat() - pauli_z() / 2.0).cwiseAbs().maxCoeff() < 1e-15);
    CHECK((s.Jx.mat() - pauli_x() / 2.0).cwiseAbs().maxCoeff() < 1e-15);
    CHECK((s.Jy.mat() - pauli_y() / 2.0).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("spin_operators: j = 1 ladder elements") {
    const SpinSystem s = spin_operators(1.0);
    CHECK(s.dim == 3);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(s.Jx.mat()(0, 1) - inv_sqrt2) < 1e-15);
    CHECK(std::abs(s.Jx.mat()(1, 2) - inv_sqrt2) < 1e-15);
    CHECK(std::abs(s.Jz.mat()(0, 0) - 1.0) < 1e-15);
    CHECK(std::abs(s.Jz.mat()(2, 2) + 1.0) < 1e-15);
}

TEST_CASE("spin_operators: commutators and Casimir up to j = 15") {
    for (const double j : {0.5, 1.0, 7.5, 15.0}) {
        const SpinSystem s = spin_operators(j);
        const cxd i(0, 1);
        const Matrix comm_xy = s.Jx.mat() * s.Jy.mat() - s.Jy.mat() * s.Jx.mat();
        const Matrix comm_yz = s.Jy.mat() * s.Jz.mat() - s.Jz.mat() * s.Jy.mat();
        const Matrix comm_zx = s.Jz.mat() * s.Jx.mat() - s.Jx.mat() * s.Jz.mat();
        CHECK((comm_xy - i * s.Jz.mat()).cwiseAbs().maxCoeff() < 1e-12);
        CHECK((comm_yz - i * s.Jx.mat()).cwiseAbs().maxCoeff() < 1e-12);
        CHECK((comm_zx - i * s.Jy.mat()).cwiseAbs().maxCoeff() < 1e-12);
        const Matrix casimir = s.Jx.mat() * s.Jx.mat() + s.Jy.mat() * s.Jy.mat() +
                               s.Jz.mat() * s.Jz.mat();
        CHECK((casimir - j * (j + 1.0) * Matrix::Identity(s.dim, s.dim)).cwiseAbs().maxCoeff() <
              1e-10);
    }
}

TEST_CASE("spin_operators: rejects non-half-integer j") {
    CHECK_THROWS_AS(spin_operators(0.3), std::invalid_argument);
    CHECK_THROWS_AS(spin_operators(-1.0), std::invalid_argument);
}

TEST_CASE("rotation_operator: theta = 0 is the identity") {
    const SpinSystem s = spin_operators(3.0);
    const DenseOperator r = rotation_operator(0.0, 1.234, s);
    CHECK((r.mat() - Matrix::Identity(s.dim, s.dim)).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("rotation_operator: j = 1/2, theta = pi, phi = pi/2 gives i sigma_x") {
    const SpinSystem s = spin_operators(0.5);
    const DenseOperator r = rotation_operator(std::numbers::pi, std::numbers::pi / 2.0, s);
    const cxd i(0, 1);
    CHECK((r.mat() - i * pauli_x()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("rotation_operator: unitary for random angles") {
    RngStream rng(11, 0, "test.rotation");
    const SpinSystem s = spin_operators(4.5);
    for (int k = 0; k < 5; ++k) {
        const double theta = rng.uniform(0.0, std::numbers::pi);
        const double phi = rng.uniform(0.0, 2.0 * std::numbers::pi);
        const DenseOperator r = rotation_operator(theta, phi, s);
        const Matrix gram = r.mat().adjoint() * r.mat();
        CHECK((gram - Matrix::Identity(s.dim, s.dim)).cwiseAbs().maxCoeff() < 1e-10);
    }
    CHECK_THROWS_AS(rotation_operator(std::nan(""), 0.0, s), std::invalid_argument);
}

TEST_CASE("tensor_product: identities and mixed-product property") {
    const DenseOperator i2(Matrix::Identity(2, 2));
    const DenseOperator i3(Matrix::Identity(3, 3));
    CHECK((tensor_product(i2, i3).mat() - Matrix::Identity(6, 6)).cwiseAbs().maxCoeff() == 0.0);

    RngStream rng(12, 0, "test.tensor");
    const Matrix a = random_matrix(3, rng), b = random_matrix(3, rng);
    const Matrix c = random_matrix(3, rng), d = random_matrix(3, rng);
    const Matrix lhs = kron(a, b) * kron(c, d);
    const Matrix rhs = kron(Matrix(a * c), Matrix(b * d));
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("tensor_product: row-major index convention") {
    // (i1, i2) -> i1 * dimB + i2: entry (1,0)x(0,1) of A x B sits at row 1*2+0, col 0*2+1.
    Matrix a = Matrix::Zero(2, 2), b = Matrix::Zero(2, 2);
    a(1, 0) = 2.0;
    b(0, 1) = 3.0;
    const Matrix k = kron(a, b);
    CHECK(std::abs(k(2, 1) - 6.0) < 1e-15);
    CHECK(k.cwiseAbs().sum() == doctest::Approx(6.0));
}

TEST_CASE("eigensystem: diagonal unitary phases sorted ascending") {
    Matrix u = Matrix::Zero(2, 2);
    u(0, 0) = std::polar(1.0, 1.1);
    u(1, 1) = std::polar(1.0, 0.3);
    const Eigensystem es = eigensystem(DenseOperator::unitary(u), SpectrumKind::unitary);
    CHECK(es.values(0) == doctest::Approx(0.3).epsilon(1e-12));
    CHECK(es.values(1) == doctest::Approx(1.1).epsilon(1e-12));
    CHECK(std::abs(std::abs(es.vectors(1, 0)) - 1.0) < 1e-12); // phase 0.3 lives on index 1
}

TEST_CASE("eigensystem: fully degenerate identity still reconstructs") {
    const DenseOperator id = DenseOperator::unitary(Matrix::Identity(5, 5));
    const Eigensystem es = eigensystem(id, SpectrumKind::unitary);
    Matrix rebuilt = Matrix::Zero(5, 5);
    for (int k = 0; k < 5; ++k)
        rebuilt += std::polar(1.0, es.values(k)) * es.vectors.col(k) * es.vectors.col(k).adjoint();
    CHECK((rebuilt - id.mat()).cwiseAbs().maxCoeff() < 1e-9);
    const Matrix gram = es.vectors.adjoint() * es.vectors;
    CHECK((gram - Matrix::Identity(5, 5)).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("eigensystem: random unitary reconstruction and orthonormality") {
    RngStream rng(13, 0, "test.eig");
    Matrix g = random_matrix(8, rng);
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ();
    const Eigensystem es = eigensystem(DenseOperator::unitary(q), SpectrumKind::unitary);

    Matrix rebuilt = Matrix::Zero(8, 8);
    for (int k = 0; k < 8; ++k)
        rebuilt += std::polar(1.0, es.values(k)) * es.vectors.col(k) * es.vectors.col(k).adjoint();
    CHECK((rebuilt - q).cwiseAbs().maxCoeff() < 1e-9);
    const Matrix gram = es.vectors.adjoint() * es.vectors;
    CHECK((gram - Matrix::Identity(8, 8)).cwiseAbs().maxCoeff() < 1e-10);
    for (int k = 0; k + 1 < 8; ++k) CHECK(es.values(k) <= es.values(k + 1));
    CHECK(es.values(0) >= -std::numbers::pi);
    CHECK(es.values(7) < std::numbers::pi);
}

TEST_CASE("eigensystem: Hermitian reconstruction") {
    RngStream rng(14, 0, "test.eig.h");
    const Matrix h = random_hermitian(10, rng);
    const Eigensystem es = eigensystem(DenseOperator::hermitian(h), SpectrumKind::hermitian);
    const Matrix rebuilt =
        es.vectors * es.values.cast<cxd>().asDiagonal() * es.vectors.adjoint();
    CHECK((rebuilt - h).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("eigensystem: attestation violations are rejected") {
    RngStream rng(15, 0, "test.eig.bad");
    const DenseOperator notherm(random_matrix(4, rng));
    CHECK_THROWS_AS(eigensystem(notherm, SpectrumKind::hermitian), std::invalid_argument);
    CHECK_THROWS_AS(eigensystem(notherm, SpectrumKind::unitary), std::invalid_argument);
}

TEST_CASE("hs_inner: Pauli orthonormality under the 1/D normalization") {
    const DenseOperator sx(pauli_x()), sy(pauli_y());
    CHECK(std::abs(hs_inner(sx, sx) - 1.0) < 1e-15);
    CHECK(std::abs(hs_inner(sx, sy)) < 1e-15);
    const DenseOperator id7(Matrix::Identity(7, 7));
    CHECK(std::abs(hs_inner(id7, id7) - 1.0) < 1e-15);
    CHECK_THROWS_AS(hs_inner(sx, id7), std::invalid_argument);
}

TEST_CASE("trace_norm_normalize: known cases and SVD oracle") {
    const DenseOperator id2(Matrix::Identity(2, 2));
    CHECK((trace_norm_normalize(id2).mat() - Matrix::Identity(2, 2) / 2.0).cwiseAbs().maxCoeff() <
          1e-14);
    const DenseOperator sx(pauli_x());
    CHECK((trace_norm_normalize(sx).mat() - pauli_x() / 2.0).cwiseAbs().maxCoeff() < 1e-14);

    RngStream rng(16, 0, "test.tnn");
    const DenseOperator o(random_matrix(5, rng));
    const DenseOperator n = trace_norm_normalize(o);
    Eigen::JacobiSVD<Matrix> svd(n.mat());
    CHECK(std::abs(svd.singularValues().sum() - 1.0) < 1e-10);

    CHECK_THROWS_AS(trace_norm_normalize(DenseOperator(Matrix::Zero(3, 3))), degenerate_input);
}

TEST_CASE("single_spin_rdm: stretched state and m = 0 state") {
    const SpinSystem s = spin_operators(1.0);
    const StateVector top = StateVector::basis_state(3, 0); // |j, j>
    const DenseOperator rho = single_spin_rdm(top, s);
    CHECK(std::abs(rho.mat()(0, 0) - 1.0) < 1e-12);
    CHECK(std::abs(rho.mat()(1, 1)) < 1e-12);

    const StateVector mid = StateVector::basis_state(3, 1); // <J> = 0
    const DenseOperator rho2 = single_spin_rdm(mid, s);
    CHECK((rho2.mat() - Matrix::Identity(2, 2) / 2.0).cwiseAbs().maxCoeff() < 1e-12);
    const double s2 = 1.0 - (rho2.mat() * rho2.mat()).trace().real();
    CHECK(s2 == doctest::Approx(0.5).epsilon(1e-12));

    CHECK_THROWS_AS(single_spin_rdm(StateVector::basis_state(1, 0), spin_operators(0.0)),
                    std::invalid_argument);
}

TEST_CASE("commutator: Pauli algebra and identity") {
    const DenseOperator sz(pauli_z()), sx(pauli_x());
    const cxd i(0, 1);
    CHECK((commutator(sz, sx).mat() - 2.0 * i * pauli_y()).cwiseAbs().maxCoeff() < 1e-15);
    const DenseOperator id(Matrix::Identity(2, 2));
    CHECK(commutator(sz, id).mat().cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("liouvillian_apply: agrees with the dense superoperator") {
    RngStream rng(17, 0, "test.liouville");
    for (const int d : {4, 6}) {
        const Matrix h = random_hermitian(d, rng);
        const Matrix o = random_matrix(d, rng);

        // column-major vec: [H, O] <-> (I x H - H^T x I) vec(O)
        const Matrix super =
            kron(Matrix::Identity(d, d), h) - kron(h.transpose(), Matrix::Identity(d, d));
        const Vector vec_o = Eigen::Map<const Vector>(o.data(), o.size());
        const Vector expected = super * vec_o;

        const Matrix got = liouvillian_apply(DenseOperator::hermitian(h), DenseOperator(o)).mat();
        const Vector got_vec = Eigen::Map<const Vector>(got.data(), got.size());
        CHECK((got_vec - expected).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("fold/unfold: round trip and inner-product preservation") {
    RngStream rng(18, 0, "test.fold");
    const Matrix a = random_matrix(6, rng), b = random_matrix(6, rng);
    const Vector fa = fold_operator(a), fb = fold_operator(b);
    CHECK(std::abs((fa.adjoint() * fb).value() -
                   hs_inner(DenseOperator(a), DenseOperator(b))) < 1e-13);
    CHECK((unfold_operator(fa, 6) - a).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("StateVector: normalizes and rejects zero input") {
    Vector v(3);
    v << 3.0, 0.0, 4.0;
    const StateVector psi(v);
    CHECK(std::abs(psi.amplitudes().norm() - 1.0) < 1e-12);
    CHECK_THROWS_AS(StateVector(Vector::Zero(3)), degenerate_input);
}

TEST_CASE("DenseOperator: attestations verified at construction") {
    CHECK_THROWS_AS(DenseOperator::hermitian(pauli_x() * cxd(0, 1)), std::invalid_argument);
    CHECK_THROWS_AS(DenseOperator::unitary(pauli_x() * 2.0), std::invalid_argument);
    CHECK(DenseOperator::unitary(pauli_x()).is_unitary());
}
