#pragma once

#include <Eigen/Dense>

#include "krylov/core/operator_space.hpp"
#include "krylov/core/types.hpp"

namespace krylov {

enum class SpaceKind { state, operator_space };
enum class GeneratorKind { hamiltonian, floquet };
enum class Termination { breakdown, space_exhausted, max_iter };

/// Orthonormal Krylov family. Columns of `vectors` are K_0, K_1, ... in the
/// working coordinates: raw amplitudes for state space, folded operator
/// coordinates (see fold_operator) for operator space. K_0 is the normalized
/// seed in both cases.
struct KrylovBasis {
    Matrix vectors;
    SpaceKind space = SpaceKind::state;
    GeneratorKind generator = GeneratorKind::hamiltonian;
    int op_dim = 0; // underlying Hilbert-space dimension when space == operator_space

    int size() const { return static_cast<int>(vectors.cols()); }

    DenseOperator operator_element(int n) const {
        return DenseOperator(unfold_operator(vectors.col(n), op_dim));
    }

    /// Largest off-diagonal |<K_i|K_j>|; used by tests and the
    /// orthogonality-warning path.
    double max_offdiagonal_overlap() const {
        const Matrix g = vectors.adjoint() * vectors;
        double worst = 0.0;
        for (Eigen::Index i = 0; i < g.rows(); ++i)
            for (Eigen::Index k = 0; k < g.cols(); ++k)
                if (i != k) worst = std::max(worst, std::abs(g(i, k)));
        return worst;
    }
};

/// Recurrence data produced alongside a Krylov basis. Lanczos fills (a, b);
/// the Floquet Arnoldi fills the upper-Hessenberg h, whose subdiagonal
/// h(n, n-1) holds the Arnoldi coefficients (real non-negative by the phase
/// convention of the construction).
struct RecurrenceCoefficients {
    RealVector a; // a_0 ... a_{dK-1}
    RealVector b; // b_1 ... b_{dK-1}, entry i is b_{i+1} >= 0
    Matrix h;     // dK x dK upper Hessenberg, empty for Lanczos
    Termination termination = Termination::breakdown;
    bool orthogonality_warning = false;
};

struct KrylovResult {
    KrylovBasis basis;
    RecurrenceCoefficients coeffs;
};

struct KrylovOptions {
    double tol = 1e-10;         // relative breakdown threshold
    bool reorthogonalize = true; // two full Gram-Schmidt passes per step
    int max_iter = -1;           // <0: run to breakdown or space exhaustion
};

} // namespace krylov
