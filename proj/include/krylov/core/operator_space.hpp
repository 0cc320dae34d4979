#pragma once

#include <Eigen/SVD>
#include <cmath>

#include "krylov/core/types.hpp"

namespace krylov {

/// Normalized Hilbert-Schmidt inner product (A|B) = Tr(A^dag B) / D.
/// This normalization is used uniformly for every operator-space
/// construction in the toolkit; the identity has unit norm at any dimension.
inline cxd hs_inner(const DenseOperator& a, const DenseOperator& b) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("hs_inner: dimension mismatch");
    return (a.mat().adjoint() * b.mat()).trace() / static_cast<double>(a.dim());
}

inline double hs_norm(const DenseOperator& a) {
    return a.mat().norm() / std::sqrt(static_cast<double>(a.dim()));
}

/// O / Tr sqrt(O O^dag): divide by the sum of singular values, so the output
/// has unit trace norm.
inline DenseOperator trace_norm_normalize(const DenseOperator& o) {
    Eigen::JacobiSVD<Matrix> svd(o.mat());
    const double tn = svd.singularValues().sum();
    if (tn < 1e-14)
        throw degenerate_input("trace_norm_normalize: trace norm below 1e-14");
    return DenseOperator(o.mat() / tn);
}

inline DenseOperator commutator(const DenseOperator& a, const DenseOperator& b) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("commutator: dimension mismatch");
    return DenseOperator(a.mat() * b.mat() - b.mat() * a.mat());
}

/// [H, O] without materializing the D^2 x D^2 superoperator.
inline DenseOperator liouvillian_apply(const DenseOperator& h, const DenseOperator& o) {
    return commutator(h, o);
}

/// Flattened operator-space coordinates. Operators are stored column-major
/// with an extra 1/sqrt(D) factor, so the plain Euclidean inner product of
/// two folded vectors equals hs_inner of the operators.
inline Vector fold_operator(const Matrix& o) {
    const double d = static_cast<double>(o.rows());
    return Eigen::Map<const Vector>(o.data(), o.size()) / std::sqrt(d);
}

inline Matrix unfold_operator(const Vector& v, int dim) {
    Matrix o = Eigen::Map<const Matrix>(v.data(), dim, dim);
    return o * std::sqrt(static_cast<double>(dim));
}

} // namespace krylov
