#pragma once

#include <algorithm>
#include <vector>

#include "krylov/core/operator_space.hpp"
#include "krylov/core/types.hpp"
#include "krylov/engine/krylov_basis.hpp"

namespace krylov {

namespace detail {

template <class MatrixT>
struct LanczosCore {
    MatrixT basis; // columns K_0 .. K_{found-1}
    std::vector<double> a, b;
    Termination termination = Termination::max_iter;
};

/// Scalar-generic Lanczos loop; instantiated with complex matrices for the
/// public engine and with real ones by the reduced gap-spectrum route.
template <class MatrixT, class VectorT, class Apply>
LanczosCore<MatrixT> lanczos_core(Apply&& apply, const VectorT& seed, const KrylovOptions& opt) {
    const Eigen::Index dim = seed.size();
    const double seed_norm = seed.norm();
    if (!(seed_norm > 1e-14)) throw degenerate_input("lanczos: zero seed");

    const int cap =
        opt.max_iter > 0 ? static_cast<int>(std::min<Eigen::Index>(opt.max_iter, dim)) : static_cast<int>(dim);

    LanczosCore<MatrixT> out;
    MatrixT q(dim, cap);
    q.col(0) = seed / seed_norm;
    out.a.reserve(cap);
    out.b.reserve(cap);

    double scale = 1.0; // running magnitude of the recurrence
    for (int n = 1; n <= cap; ++n) {
        VectorT w = apply(VectorT(q.col(n - 1)));
        double an = 0.0;
        if (opt.reorthogonalize) {
            for (int pass = 0; pass < 2; ++pass) {
                const VectorT proj = q.leftCols(n).adjoint() * w;
                w.noalias() -= q.leftCols(n) * proj;
                an += std::real(proj(n - 1));
            }
        } else {
            if (n >= 2) w.noalias() -= out.b.back() * q.col(n - 2);
            an = std::real((q.col(n - 1).adjoint() * w).value());
            w.noalias() -= an * q.col(n - 1);
        }
        out.a.push_back(an);
        scale = std::max(scale, std::abs(an));

        const double bn = w.norm();
        if (bn < opt.tol * scale) {
            out.termination = n == dim ? Termination::space_exhausted : Termination::breakdown;
            break;
        }
        if (n == cap) {
            out.termination = cap == dim ? Termination::space_exhausted : Termination::max_iter;
            break;
        }
        out.b.push_back(bn);
        scale = std::max(scale, bn);
        q.col(n) = w / bn;
    }
    out.basis = q.leftCols(static_cast<Eigen::Index>(out.a.size()));
    return out;
}

} // namespace detail

/// Lanczos tridiagonalization of a Hermitian map given as a callable
/// `apply : Vector -> Vector`. The seed is normalized into K_0; iteration
/// stops at breakdown (residual below tol relative to the recurrence scale),
/// space exhaustion, or the max_iter cap.
///
/// With reorthogonalize = true (the production default) every residual is
/// explicitly projected against all previous basis vectors twice. Without it
/// the plain three-term recurrence runs, and the result carries a warning
/// flag if the returned basis lost orthogonality beyond 1e-6.
template <class Apply>
KrylovResult lanczos(Apply&& apply, const Vector& seed, const KrylovOptions& opt = {}) {
    auto core = detail::lanczos_core<Matrix, Vector>(std::forward<Apply>(apply), seed, opt);
    const int found = static_cast<int>(core.a.size());

    KrylovResult out;
    out.basis.vectors = std::move(core.basis);
    out.basis.generator = GeneratorKind::hamiltonian;
    out.coeffs.a = Eigen::Map<const RealVector>(core.a.data(), found);
    out.coeffs.b = Eigen::Map<const RealVector>(core.b.data(), static_cast<Eigen::Index>(core.b.size()));
    out.coeffs.termination = core.termination;
    if (!opt.reorthogonalize)
        out.coeffs.orthogonality_warning = out.basis.max_offdiagonal_overlap() > 1e-6;
    return out;
}

/// State-space Lanczos: apply = H.
inline KrylovResult lanczos_state(const DenseOperator& h, const StateVector& seed,
                                  const KrylovOptions& opt = {}) {
    auto result = lanczos(
        [&h](const Vector& v) -> Vector { return h.mat() * v; },
        seed.amplitudes(), opt);
    result.basis.space = SpaceKind::state;
    return result;
}

/// Operator-space Lanczos: apply = [H, .] in folded coordinates, matrix-free.
inline KrylovResult lanczos_operator(const DenseOperator& h, const DenseOperator& seed_op,
                                     const KrylovOptions& opt = {}) {
    const int d = h.dim();
    if (seed_op.dim() != d)
        throw std::invalid_argument("lanczos_operator: seed dimension does not match Hamiltonian");
    auto apply = [&h, d](const Vector& v) -> Vector {
        const Eigen::Map<const Matrix> o(v.data(), d, d);
        Matrix c = h.mat() * o;
        c.noalias() -= o * h.mat();
        return Eigen::Map<const Vector>(c.data(), c.size());
    };
    auto result = lanczos(apply, fold_operator(seed_op.mat()), opt);
    result.basis.space = SpaceKind::operator_space;
    result.basis.op_dim = d;
    return result;
}

} // namespace krylov
