#pragma once

#include <vector>

#include "krylov/core/density.hpp"
#include "krylov/core/spin.hpp"
#include "krylov/core/types.hpp"

namespace krylov::diagnostics {

/// Linear entropy S2(t) = 1 - Tr rho_s(t)^2 of one constituent spin under
/// stroboscopic evolution; values lie in [0, 1/2].
inline std::vector<double> linear_entropy_series(const DenseOperator& u, const StateVector& psi0,
                                                 const SpinSystem& spin, int n_steps) {
    if (!u.is_unitary())
        throw std::invalid_argument("linear_entropy_series: map must carry the unitary attestation");
    std::vector<double> s2;
    s2.reserve(n_steps + 1);
    Vector psi = psi0.amplitudes();
    for (int j = 0; j <= n_steps; ++j) {
        const DenseOperator rho = single_spin_rdm(StateVector(psi), spin);
        s2.push_back(1.0 - (rho.mat() * rho.mat()).trace().real());
        if (j < n_steps) psi = u.mat() * psi;
    }
    return s2;
}

/// Infinite-temperature OTOC -Tr([A, A(t)]^2) / (2 dim) at stroboscopic
/// steps, with A(t) the Heisenberg-evolved operator. Non-negative for
/// Hermitian A.
inline std::vector<double> otoc_series(const DenseOperator& u, const DenseOperator& a, int n_steps) {
    if (!u.is_unitary())
        throw std::invalid_argument("otoc_series: map must carry the unitary attestation");
    if (!a.is_hermitian()) {
        const double dev = (a.mat() - a.mat().adjoint()).cwiseAbs().maxCoeff();
        if (dev >= tol::hermitian)
            throw std::invalid_argument("otoc_series: observable must be Hermitian");
    }
    if (u.dim() != a.dim()) throw std::invalid_argument("otoc_series: dimension mismatch");

    std::vector<double> otoc;
    otoc.reserve(n_steps + 1);
    Matrix at = a.mat();
    const double dim = static_cast<double>(a.dim());
    for (int j = 0; j <= n_steps; ++j) {
        const Matrix c = a.mat() * at - at * a.mat();
        otoc.push_back(-(c * c).trace().real() / (2.0 * dim));
        if (j < n_steps) at = u.mat().adjoint() * at * u.mat();
    }
    return otoc;
}

} // namespace krylov::diagnostics
