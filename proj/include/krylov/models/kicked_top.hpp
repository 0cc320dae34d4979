#pragma once

#include <numbers>

#include "krylov/core/rotation.hpp"
#include "krylov/core/spin.hpp"
#include "krylov/core/types.hpp"

namespace krylov::models {

/// Spin-j kicked top, one period: torsion about z followed by a precession
/// about y. kappa controls the degree of chaos; alpha defaults to pi/2.
struct KickedTopSpec {
    double j = 15.0;
    double kappa = 6.0;
    double alpha = std::numbers::pi / 2.0;
};

/// U = exp(-i kappa/(2j) Jz^2) exp(-i alpha Jy), both factors by spectral
/// decomposition.
inline DenseOperator kicked_top_unitary(const KickedTopSpec& spec, const SpinSystem& spin) {
    if (spin.j != spec.j)
        throw std::invalid_argument("kicked_top_unitary: spin system does not match spec.j");
    if (!std::isfinite(spec.kappa) || !std::isfinite(spec.alpha))
        throw std::invalid_argument("kicked_top_unitary: parameters must be finite");

    const Matrix jz2 = spin.Jz.mat() * spin.Jz.mat();
    const Matrix torsion = expi_hermitian(-spec.kappa / (2.0 * spec.j) * jz2);
    const Matrix precession = expi_hermitian(-spec.alpha * spin.Jy.mat());
    return DenseOperator::unitary(torsion * precession);
}

inline DenseOperator kicked_top_unitary(const KickedTopSpec& spec) {
    return kicked_top_unitary(spec, spin_operators(spec.j));
}

/// Spin coherent state R(theta, phi) |j, j>; the reference state is the
/// maximal-weight state (north pole).
inline StateVector spin_coherent_state(double j, double theta, double phi) {
    const SpinSystem spin = spin_operators(j);
    const DenseOperator r = rotation_operator(theta, phi, spin);
    return StateVector(r.mat().col(0)); // |j, j> is the first basis vector
}

inline StateVector spin_coherent_state(const SpinSystem& spin, double theta, double phi) {
    const DenseOperator r = rotation_operator(theta, phi, spin);
    return StateVector(r.mat().col(0));
}

} // namespace krylov::models
