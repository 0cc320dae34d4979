#pragma once

#include <utility>

#include "krylov/core/types.hpp"
#include "krylov/engine/floquet_arnoldi.hpp"
#include "krylov/engine/lanczos.hpp"

namespace krylov {

/// Population variance of the Arnoldi subdiagonal sequence h(n, n-1).
inline double arnoldi_subdiag_variance(const RecurrenceCoefficients& coeffs) {
    const RealVector s = arnoldi_subdiagonal(coeffs);
    if (s.size() < 2)
        throw degenerate_input("arnoldi_subdiag_variance: need at least 2 subdiagonal entries");
    const double mean = s.mean();
    return (s.array() - mean).square().mean();
}

/// Both sides of the variance identity Delta H^2 = b_1^2: the energy variance
/// of the seed state and the square of the first Lanczos off-diagonal
/// coefficient.
inline std::pair<double, double> variance_identity_check(const DenseOperator& h,
                                                         const StateVector& psi0) {
    const Vector& v = psi0.amplitudes();
    const Vector hv = h.mat() * v;
    const double e1 = (v.adjoint() * hv).value().real();
    const double e2 = hv.squaredNorm(); // <psi|H^2|psi> for Hermitian H
    const double var = e2 - e1 * e1;

    const auto res = lanczos_state(h, psi0, KrylovOptions{.max_iter = 2});
    const double b1 = res.coeffs.b.size() > 0 ? res.coeffs.b(0) : 0.0;
    return {var, b1 * b1};
}

} // namespace krylov
