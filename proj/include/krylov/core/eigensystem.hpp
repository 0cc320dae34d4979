#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <vector>

#include "krylov/core/types.hpp"

namespace krylov {

enum class SpectrumKind { hermitian, unitary };

/// Diagonalization result. `values` holds energies (Hermitian input, sorted
/// ascending) or eigenphases in [-pi, pi) (unitary input, sorted ascending);
/// columns of `vectors` are the matching orthonormal eigenvectors.
struct Eigensystem {
    RealVector values;
    Matrix vectors;

    int dim() const { return static_cast<int>(values.size()); }
};

namespace detail {

inline void check_attestation(const DenseOperator& a, SpectrumKind kind) {
    if (kind == SpectrumKind::hermitian) {
        if (a.is_hermitian()) return;
        const double dev = (a.mat() - a.mat().adjoint()).cwiseAbs().maxCoeff();
        if (dev >= tol::hermitian)
            throw std::invalid_argument("eigensystem: matrix is not Hermitian, max |A - A^dag| = " +
                                        std::to_string(dev));
    } else {
        if (a.is_unitary()) return;
        const Matrix gram = a.mat().adjoint() * a.mat();
        const double dev = (gram - Matrix::Identity(a.dim(), a.dim())).cwiseAbs().maxCoeff();
        if (dev >= tol::unitary)
            throw std::invalid_argument("eigensystem: matrix is not unitary, max |A^dag A - I| = " +
                                        std::to_string(dev));
    }
}

/// Re-orthonormalize runs of near-equal values so the full column family is
/// orthonormal even inside degenerate clusters.
inline void reorthonormalize_clusters(Eigensystem& es, double gap) {
    const int d = es.dim();
    int lo = 0;
    while (lo < d) {
        int hi = lo + 1;
        while (hi < d && es.values(hi) - es.values(hi - 1) < gap) ++hi;
        if (hi - lo > 1) {
            Eigen::HouseholderQR<Matrix> qr(es.vectors.middleCols(lo, hi - lo));
            es.vectors.middleCols(lo, hi - lo) =
                Matrix(qr.householderQ()).leftCols(hi - lo);
        }
        lo = hi;
    }
}

} // namespace detail

/// Eigendecomposition of a Hermitian or unitary operator.
///
/// The unitary path goes through the complex Schur form: for a normal matrix
/// the Schur factor is diagonal up to roundoff, and the Schur basis is
/// orthonormal by construction, which dense nonsymmetric eigensolvers do not
/// guarantee. The eigenphase branch is fixed to [-pi, pi).
inline Eigensystem eigensystem(const DenseOperator& a, SpectrumKind kind) {
    detail::check_attestation(a, kind);
    const int d = a.dim();
    Eigensystem out;

    if (kind == SpectrumKind::hermitian) {
        Eigen::SelfAdjointEigenSolver<Matrix> es(a.mat());
        if (es.info() != Eigen::Success)
            throw numerical_failure("eigensystem: Hermitian eigensolver did not converge");
        out.values = es.eigenvalues();
        out.vectors = es.eigenvectors();
        return out; // already sorted ascending, orthonormal throughout
    }

    Eigen::ComplexSchur<Matrix> schur(a.mat(), /*computeU=*/true);
    if (schur.info() != Eigen::Success)
        throw numerical_failure("eigensystem: Schur decomposition did not converge");

    RealVector phases(d);
    for (int k = 0; k < d; ++k) {
        double p = std::arg(schur.matrixT()(k, k));
        if (p >= std::numbers::pi) p -= 2.0 * std::numbers::pi;
        phases(k) = p;
    }
    std::vector<int> order(d);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int i, int k) { return phases(i) < phases(k); });

    out.values.resize(d);
    out.vectors.resize(d, d);
    for (int k = 0; k < d; ++k) {
        out.values(k) = phases(order[k]);
        out.vectors.col(k) = schur.matrixU().col(order[k]);
    }
    detail::reorthonormalize_clusters(out, tol::phase_cluster);
    return out;
}

} // namespace krylov
