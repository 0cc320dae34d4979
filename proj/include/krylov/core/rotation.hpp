#pragma once

#include <cmath>

#include "krylov/core/spin.hpp"
#include "krylov/core/types.hpp"

namespace krylov {

/// exp(i G) for Hermitian G, via spectral decomposition. Exact (up to the
/// eigensolver) for the dense dimensions this toolkit targets; no series
/// truncation involved.
inline Matrix expi_hermitian(const Matrix& generator) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(generator);
    if (es.info() != Eigen::Success)
        throw numerical_failure("expi_hermitian: eigensolver did not converge");
    const Vector phases =
        es.eigenvalues().unaryExpr([](double l) { return std::polar(1.0, l); });
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

/// R(theta, phi) = exp[i theta (Jx sin(phi) - Jy cos(phi))].
inline DenseOperator rotation_operator(double theta, double phi, const SpinSystem& spin) {
    if (!std::isfinite(theta) || !std::isfinite(phi))
        throw std::invalid_argument("rotation_operator: angles must be finite");
    const Matrix generator =
        theta * (std::sin(phi) * spin.Jx.mat() - std::cos(phi) * spin.Jy.mat());
    return DenseOperator::unitary(expi_hermitian(generator));
}

} // namespace krylov
