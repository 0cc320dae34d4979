#pragma once

#include "krylov/core/spin.hpp"
#include "krylov/core/types.hpp"

namespace krylov {

/// Reduced density matrix of one constituent spin-1/2 of a spin-j system in
/// the symmetric subspace: rho = (I + sum_a <J_a>/j sigma_a) / 2.
inline DenseOperator single_spin_rdm(const StateVector& psi, const SpinSystem& spin) {
    if (spin.j <= 0.0)
        throw std::invalid_argument("single_spin_rdm: spin system has no constituent qubit (j = 0)");
    if (psi.dim() != spin.dim)
        throw std::invalid_argument("single_spin_rdm: state dimension does not match spin system");

    const Vector& v = psi.amplitudes();
    const double jx = (v.adjoint() * spin.Jx.mat() * v).value().real() / spin.j;
    const double jy = (v.adjoint() * spin.Jy.mat() * v).value().real() / spin.j;
    const double jz = (v.adjoint() * spin.Jz.mat() * v).value().real() / spin.j;

    Matrix rho(2, 2);
    const cxd i(0.0, 1.0);
    rho(0, 0) = 0.5 * (1.0 + jz);
    rho(1, 1) = 0.5 * (1.0 - jz);
    rho(0, 1) = 0.5 * (jx - i * jy);
    rho(1, 0) = 0.5 * (jx + i * jy);
    return DenseOperator::hermitian(std::move(rho));
}

} // namespace krylov
