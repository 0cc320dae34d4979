#pragma once

#include <cmath>
#include <optional>

#include "krylov/core/types.hpp"

namespace krylov {

/// Angular-momentum operators for a single spin j (hbar = 1). The basis is
/// |j,m> with m = j, j-1, ..., -j, so Jz is diagonal with entries j ... -j.
struct SpinSystem {
    double j;
    int dim;
    DenseOperator Jx, Jy, Jz;
};

namespace detail {

inline std::optional<int> twice_half_integer(double j) {
    const double twoj = 2.0 * j;
    const double r = std::round(twoj);
    if (j < 0.0 || !std::isfinite(j) || std::abs(twoj - r) > 1e-9) return std::nullopt;
    return static_cast<int>(r);
}

} // namespace detail

inline SpinSystem spin_operators(double j) {
    const auto twoj = detail::twice_half_integer(j);
    if (!twoj)
        throw std::invalid_argument("spin_operators: j must be a non-negative half-integer");
    const int dim = *twoj + 1;

    Matrix jp = Matrix::Zero(dim, dim); // raising operator J+
    Matrix jz = Matrix::Zero(dim, dim);
    for (int k = 0; k < dim; ++k) {
        const double m = j - k;
        jz(k, k) = m;
        if (k > 0) // <j,m+1| J+ |j,m>
            jp(k - 1, k) = std::sqrt(j * (j + 1.0) - m * (m + 1.0));
    }
    const Matrix jm = jp.adjoint();
    const cxd i(0.0, 1.0);

    return SpinSystem{
        j, dim,
        DenseOperator::hermitian((jp + jm) / 2.0),
        DenseOperator::hermitian((jp - jm) / (2.0 * i)),
        DenseOperator::hermitian(std::move(jz)),
    };
}

} // namespace krylov
