#pragma once

#include "krylov/core/eigensystem.hpp"
#include "krylov/core/rotation.hpp"
#include "krylov/core/spin.hpp"
#include "krylov/core/types.hpp"

namespace krylov::models {

/// Rotation generator for seeds living on a generic d-dimensional dynamics:
/// the space is treated as a single collective spin with j = (d-1)/2.
inline SpinSystem collective_spin(int dim) {
    return spin_operators((dim - 1) / 2.0);
}

/// R(theta, phi) |v_which> of the dynamics' eigenbasis, eigenvectors ordered
/// by ascending eigenphase. Sweeping theta away from 0 delocalizes the seed
/// and lowers its IPR.
inline StateVector rotated_eigenvector_seed(const Eigensystem& eig, int which, double theta,
                                            double phi) {
    if (which < 0 || which >= eig.dim())
        throw std::invalid_argument("rotated_eigenvector_seed: eigenvector index out of range");
    const SpinSystem spin = collective_spin(eig.dim());
    const DenseOperator r = rotation_operator(theta, phi, spin);
    return StateVector(r.mat() * eig.vectors.col(which));
}

inline StateVector rotated_eigenvector_seed(const DenseOperator& u_dyn, int which, double theta,
                                            double phi) {
    return rotated_eigenvector_seed(eigensystem(u_dyn, SpectrumKind::unitary), which, theta, phi);
}

/// Operator seed R U R^dag: the similarity transform keeps the spectrum of
/// the dynamics and sweeps how the seed spreads over its eigenbasis.
inline DenseOperator rotated_operator_seed(const DenseOperator& u_dyn, double theta, double phi) {
    const SpinSystem spin = collective_spin(u_dyn.dim());
    const DenseOperator r = rotation_operator(theta, phi, spin);
    Matrix seed = r.mat() * u_dyn.mat() * r.mat().adjoint();
    if (u_dyn.is_unitary()) return DenseOperator::unitary(std::move(seed));
    return DenseOperator(std::move(seed));
}

} // namespace krylov::models
