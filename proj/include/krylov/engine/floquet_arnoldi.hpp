#pragma once

#include <algorithm>
#include <vector>

#include "krylov/core/operator_space.hpp"
#include "krylov/core/types.hpp"
#include "krylov/engine/krylov_basis.hpp"

namespace krylov {

/// Krylov basis of a unitary one-period map via the Arnoldi recursion
/// K_n = [ U K_{n-1} - sum_j h(j, n-1) K_j ] / h(n, n-1),
/// with h(j, k) = <K_j| U |K_k> and a second orthogonalization pass on every
/// residual. Normalizing the residual directly makes each subdiagonal entry
/// h(n, n-1) real non-negative, which fixes the phase gauge of the basis.
template <class Apply>
KrylovResult floquet_arnoldi(Apply&& apply_u, const Vector& seed, const KrylovOptions& opt = {}) {
    const Eigen::Index dim = seed.size();
    const double seed_norm = seed.norm();
    if (!(seed_norm > 1e-14)) throw degenerate_input("floquet_arnoldi: zero seed");

    const int cap = opt.max_iter > 0 ? std::min<Eigen::Index>(opt.max_iter, dim) : dim;

    Matrix q(dim, cap);
    q.col(0) = seed / seed_norm;
    Matrix h = Matrix::Zero(cap, cap);
    Termination term = Termination::max_iter;

    double scale = 1.0;
    int found = 1;
    for (int n = 1; n <= cap; ++n) {
        Vector w = apply_u(q.col(n - 1));
        for (int pass = 0; pass < 2; ++pass) {
            const Vector proj = q.leftCols(n).adjoint() * w;
            w.noalias() -= q.leftCols(n) * proj;
            h.block(0, n - 1, n, 1) += proj;
        }
        for (int k = 0; k < n; ++k) scale = std::max(scale, std::abs(h(k, n - 1)));

        const double hn = w.norm();
        if (hn < opt.tol * scale) {
            term = n == dim ? Termination::space_exhausted : Termination::breakdown;
            break;
        }
        if (n == cap) {
            term = cap == dim ? Termination::space_exhausted : Termination::max_iter;
            break;
        }
        h(n, n - 1) = hn;
        scale = std::max(scale, hn);
        q.col(n) = w / hn;
        found = n + 1;
    }

    KrylovResult out;
    out.basis.vectors = q.leftCols(found);
    out.basis.generator = GeneratorKind::floquet;
    out.coeffs.h = h.topLeftCorner(found, found);
    out.coeffs.termination = term;
    return out;
}

/// State-space Floquet Krylov: U acts directly on state vectors.
inline KrylovResult floquet_arnoldi_state(const DenseOperator& u, const StateVector& seed,
                                          const KrylovOptions& opt = {}) {
    if (!u.is_unitary())
        throw std::invalid_argument("floquet_arnoldi_state: map must carry the unitary attestation");
    auto result = floquet_arnoldi(
        [&u](const Vector& v) -> Vector { return u.mat() * v; },
        seed.amplitudes(), opt);
    result.basis.space = SpaceKind::state;
    return result;
}

/// Operator-space Floquet Krylov: U acts as the Heisenberg superoperator
/// |O) -> |U^dag O U) on folded coordinates.
inline KrylovResult floquet_arnoldi_operator(const DenseOperator& u, const DenseOperator& seed_op,
                                             const KrylovOptions& opt = {}) {
    if (!u.is_unitary())
        throw std::invalid_argument("floquet_arnoldi_operator: map must carry the unitary attestation");
    const int d = u.dim();
    if (seed_op.dim() != d)
        throw std::invalid_argument("floquet_arnoldi_operator: seed dimension does not match U");
    auto apply = [&u, d](const Vector& v) -> Vector {
        const Eigen::Map<const Matrix> o(v.data(), d, d);
        const Matrix c = u.mat().adjoint() * o * u.mat();
        return Eigen::Map<const Vector>(c.data(), c.size());
    };
    auto result = floquet_arnoldi(apply, fold_operator(seed_op.mat()), opt);
    result.basis.space = SpaceKind::operator_space;
    result.basis.op_dim = d;
    return result;
}

/// Subdiagonal h(n, n-1) sequence as a real vector (the Arnoldi coefficients).
inline RealVector arnoldi_subdiagonal(const RecurrenceCoefficients& coeffs) {
    const Eigen::Index n = coeffs.h.rows();
    RealVector s(std::max<Eigen::Index>(n - 1, 0));
    for (Eigen::Index k = 1; k < n; ++k) s(k - 1) = coeffs.h(k, k - 1).real();
    return s;
}

} // namespace krylov
