#pragma once

#include "krylov/core/types.hpp"

namespace krylov {

/// Kronecker product with the row-major index convention
/// (i1, i2) -> i1 * dim(B) + i2. The same convention is used everywhere in
/// this toolkit (composite states, coupling diagonals, parity operators).
inline Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index k = 0; k < a.cols(); ++k)
            out.block(i * b.rows(), k * b.cols(), b.rows(), b.cols()) = a(i, k) * b;
    return out;
}

inline DenseOperator tensor_product(const DenseOperator& a, const DenseOperator& b) {
    return DenseOperator(kron(a.mat(), b.mat()));
}

} // namespace krylov
