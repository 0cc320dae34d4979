#pragma once

#include <vector>

#include "krylov/core/eigensystem.hpp"
#include "krylov/core/operator_space.hpp"
#include "krylov/core/types.hpp"

namespace krylov::diagnostics {

/// IPR of a state in the dynamics' eigenbasis: sum_i |<v_i|psi>|^4.
/// Ranges from 1/d (uniformly delocalized) to 1 (eigenstate).
inline double ipr_state(const StateVector& psi, const Eigensystem& eig) {
    if (psi.dim() != eig.dim())
        throw std::invalid_argument("ipr_state: dimension mismatch");
    const Vector overlaps = eig.vectors.adjoint() * psi.amplitudes();
    return overlaps.cwiseAbs2().cwiseAbs2().sum();
}

/// Normalization applied to an operator before its IPR is taken.
/// hilbert_schmidt divides by sqrt(Tr(O O^dag)); trace_norm divides by the
/// sum of singular values; none uses the operator exactly as given (for
/// callers that normalized in a larger space before projecting to a sector).
/// The Hilbert-Schmidt convention is the default: it is the one that
/// reproduces the reference values for the spin models and keeps the
/// normalization consistent with the operator-space inner product.
enum class OperatorIprNorm { hilbert_schmidt, trace_norm, none };

/// Operator IPR: normalize O, then sum_i |<v_i|O|v_i>|^2 over the dynamics'
/// eigenbasis. Zero is legal (a hollow matrix in the eigenbasis). Inside
/// degenerate clusters the diagonal is basis-dependent, so the block of O
/// restricted to each cluster is diagonalized first; its eigenvalues replace
/// the raw diagonal entries.
inline double ipr_operator(const DenseOperator& o, const Eigensystem& eig,
                           OperatorIprNorm norm = OperatorIprNorm::hilbert_schmidt) {
    if (o.dim() != eig.dim())
        throw std::invalid_argument("ipr_operator: dimension mismatch");

    double scale = 1.0;
    if (norm == OperatorIprNorm::hilbert_schmidt) {
        scale = o.mat().norm();
    } else if (norm == OperatorIprNorm::trace_norm) {
        Eigen::JacobiSVD<Matrix> svd(o.mat());
        scale = svd.singularValues().sum();
    }
    if (scale < 1e-14) throw degenerate_input("ipr_operator: operator is (near-)zero");
    const Matrix in_basis = (eig.vectors.adjoint() * o.mat() * eig.vectors) / scale;

    const int d = eig.dim();
    double ipr = 0.0;
    int lo = 0;
    while (lo < d) {
        int hi = lo + 1;
        while (hi < d && eig.values(hi) - eig.values(hi - 1) < tol::phase_cluster) ++hi;
        if (hi - lo == 1) {
            ipr += std::norm(in_basis(lo, lo));
        } else {
            Eigen::ComplexEigenSolver<Matrix> es(in_basis.block(lo, lo, hi - lo, hi - lo));
            if (es.info() != Eigen::Success)
                throw numerical_failure("ipr_operator: cluster diagonalization failed");
            ipr += es.eigenvalues().cwiseAbs2().sum();
        }
        lo = hi;
    }
    return ipr;
}

} // namespace krylov::diagnostics
