#pragma once

#include "krylov/core/tensor.hpp"
#include "krylov/core/types.hpp"
#include "krylov/models/cue.hpp"
#include "krylov/models/rng.hpp"

namespace krylov::models {

/// Two CUE subsystems of dimension d coupled by a diagonal random-phase
/// unitary of strength epsilon. The coupling phases xi are drawn once per
/// seed and stay fixed while epsilon varies, so sweeps over the coupling
/// reuse the same disorder realization.
struct RmteSpec {
    int d = 5;
    double epsilon = 1.0;
    uint64_t seed = 0;
    uint64_t realization = 0; // ensemble index; selects independent sub-streams
};

/// Coupling exponents xi_{n1 n2}, uniform on [-1/2, 1/2), indexed row-major
/// like the Kronecker product.
inline Eigen::MatrixXd rmte_coupling_exponents(const RmteSpec& spec) {
    RngStream rng(spec.seed, spec.realization, "rmte.xi");
    Eigen::MatrixXd xi(spec.d, spec.d);
    for (int n1 = 0; n1 < spec.d; ++n1)
        for (int n2 = 0; n2 < spec.d; ++n2)
            xi(n1, n2) = rng.uniform01() - 0.5;
    return xi;
}

/// U_eps = U12(eps) (U1 x U2) on the d^2-dimensional composite space.
inline DenseOperator rmte_unitary(const RmteSpec& spec) {
    if (spec.d < 2) throw std::invalid_argument("rmte_unitary: subsystem dimension must be >= 2");
    if (spec.epsilon < 0.0 || spec.epsilon > 1.0)
        throw std::invalid_argument("rmte_unitary: epsilon must lie in [0, 1]");

    RngStream rng1(spec.seed, spec.realization, "rmte.u1");
    RngStream rng2(spec.seed, spec.realization, "rmte.u2");
    const DenseOperator u1 = sample_cue(spec.d, rng1);
    const DenseOperator u2 = sample_cue(spec.d, rng2);
    const Eigen::MatrixXd xi = rmte_coupling_exponents(spec);

    Matrix u = kron(u1.mat(), u2.mat());
    if (spec.epsilon > 0.0) {
        for (int n1 = 0; n1 < spec.d; ++n1)
            for (int n2 = 0; n2 < spec.d; ++n2)
                u.row(n1 * spec.d + n2) *=
                    std::polar(1.0, 2.0 * std::numbers::pi * spec.epsilon * xi(n1, n2));
    }
    return DenseOperator::unitary(std::move(u));
}

} // namespace krylov::models
