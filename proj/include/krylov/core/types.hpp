#pragma once

#include <Eigen/Dense>
#include <complex>
#include <utility>

#include "krylov/core/errors.hpp"

namespace krylov {

using cxd = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

namespace tol {
// Construction / attestation tolerances, entrywise.
inline constexpr double hermitian = 1e-12;
inline constexpr double unitary = 1e-10;
inline constexpr double state_norm = 1e-12;
// Eigenphase clusters closer than this are treated as degenerate.
inline constexpr double phase_cluster = 1e-9;
} // namespace tol

/// Unit-norm vector in a d-dimensional Hilbert space. Any constructor
/// normalizes, so the norm-1 invariant holds for every instance.
class StateVector {
public:
    explicit StateVector(Vector amplitudes) : amps_(std::move(amplitudes)) {
        const double n = amps_.norm();
        if (!(n > 1e-14))
            throw degenerate_input("StateVector: amplitude vector has (near-)zero norm");
        amps_ /= n;
    }

    static StateVector basis_state(int dim, int index) {
        Vector v = Vector::Zero(dim);
        v(index) = 1.0;
        return StateVector(std::move(v));
    }

    int dim() const { return static_cast<int>(amps_.size()); }
    const Vector& amplitudes() const { return amps_; }

private:
    Vector amps_;
};

/// Dense d x d complex matrix with optional Hermitian/unitary attestations.
/// Attestations are verified at construction time, so a set flag can be
/// trusted downstream without re-checking.
class DenseOperator {
public:
    explicit DenseOperator(Matrix m) : m_(std::move(m)) {
        if (m_.rows() != m_.cols() || m_.rows() == 0)
            throw std::invalid_argument("DenseOperator: matrix must be square and non-empty");
    }

    static DenseOperator hermitian(Matrix m) {
        DenseOperator op(std::move(m));
        const double dev = (op.m_ - op.m_.adjoint()).cwiseAbs().maxCoeff();
        if (dev >= tol::hermitian)
            throw std::invalid_argument("DenseOperator: Hermitian attestation violated, max |A - A^dag| = " +
                                        std::to_string(dev));
        op.herm_ = true;
        return op;
    }

    static DenseOperator unitary(Matrix m) {
        DenseOperator op(std::move(m));
        const Matrix gram = op.m_.adjoint() * op.m_;
        const double dev = (gram - Matrix::Identity(op.dim(), op.dim())).cwiseAbs().maxCoeff();
        if (dev >= tol::unitary)
            throw std::invalid_argument("DenseOperator: unitary attestation violated, max |A^dag A - I| = " +
                                        std::to_string(dev));
        op.unit_ = true;
        return op;
    }

    int dim() const { return static_cast<int>(m_.rows()); }
    const Matrix& mat() const { return m_; }
    bool is_hermitian() const { return herm_; }
    bool is_unitary() const { return unit_; }

private:
    Matrix m_;
    bool herm_ = false;
    bool unit_ = false;
};

} // namespace krylov
