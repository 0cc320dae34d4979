#pragma once

#include <Eigen/QR>

#include "krylov/core/types.hpp"
#include "krylov/models/rng.hpp"

namespace krylov::models {

/// Haar-distributed unitary. A matrix of iid standard complex Gaussians is
/// QR-factorized and each column of Q is rescaled by the unit phase of the
/// matching diagonal entry of R; without this phase fix the QR convention
/// biases the distribution away from Haar measure.
inline DenseOperator sample_cue(int d, RngStream& rng) {
    if (d < 1) throw std::invalid_argument("sample_cue: dimension must be >= 1");

    Matrix g(d, d);
    for (int col = 0; col < d; ++col)
        for (int row = 0; row < d; ++row)
            g(row, col) = cxd(rng.gaussian(), rng.gaussian()) / std::sqrt(2.0);

    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ();
    const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int col = 0; col < d; ++col) {
        const cxd rd = r(col, col);
        const double m = std::abs(rd);
        if (m > 0.0) q.col(col) *= rd / m;
    }
    return DenseOperator::unitary(std::move(q));
}

} // namespace krylov::models
