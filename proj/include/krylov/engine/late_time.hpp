#pragma once

#include "krylov/core/eigensystem.hpp"
#include "krylov/core/types.hpp"
#include "krylov/engine/krylov_basis.hpp"

namespace krylov {

/// Dephasing prediction for the late-time complexity plateau:
///   K_C(inf) = sum_j C_j p_j,  C_j = sum_i i |<K_i|v_j>|^2,  p_j = |<v_j|psi_0>|^2.
/// Exact long-time average for Floquet dynamics with a non-degenerate
/// eigenphase spectrum; for Hamiltonian dynamics it requires a
/// non-degenerate energy spectrum as well.
inline double late_time_complexity(const Eigensystem& eig, const Vector& seed,
                                   const KrylovBasis& basis) {
    if (eig.vectors.rows() != basis.vectors.rows() || seed.size() != basis.vectors.rows())
        throw std::invalid_argument("late_time_complexity: dimension mismatch");

    const Vector psi = seed / seed.norm();
    const Matrix overlaps = basis.vectors.adjoint() * eig.vectors; // <K_i|v_j>
    double kc = 0.0;
    for (int j = 0; j < eig.dim(); ++j) {
        const double pj = std::norm((eig.vectors.col(j).adjoint() * psi).value());
        double cj = 0.0;
        for (int i = 1; i < basis.size(); ++i)
            cj += static_cast<double>(i) * std::norm(overlaps(i, j));
        kc += cj * pj;
    }
    return kc;
}

inline double late_time_complexity(const Eigensystem& eig, const StateVector& seed,
                                   const KrylovBasis& basis) {
    return late_time_complexity(eig, seed.amplitudes(), basis);
}

} // namespace krylov
