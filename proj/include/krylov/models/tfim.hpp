#pragma once

#include <cmath>
#include <vector>

#include "krylov/core/tensor.hpp"
#include "krylov/core/types.hpp"

namespace krylov::models {

/// Transverse-field Ising chain with open boundary:
/// H = sum_k (hx sx_k + hz sz_k) - J sum_{k<L} sz_k sz_{k+1}.
struct TfimSpec {
    int L = 6;
    double J = 1.0;
    double hx = 1.0;
    double hz = 0.2;
};

enum class Axis { x, y, z };

namespace detail {

inline Matrix pauli(Axis axis) {
    Matrix s(2, 2);
    const cxd i(0.0, 1.0);
    switch (axis) {
        case Axis::x: s << 0, 1, 1, 0; break;
        case Axis::y: s << 0, -i, i, 0; break;
        case Axis::z: s << 1, 0, 0, -1; break;
    }
    return s;
}

/// sigma_axis on site k (1-based) of an L-site chain; site 1 is the leftmost
/// Kronecker factor (most significant bit).
inline Matrix site_pauli(int L, int k, Axis axis) {
    const Eigen::Index left = Eigen::Index(1) << (k - 1);
    const Eigen::Index right = Eigen::Index(1) << (L - k);
    Matrix out = kron(Matrix::Identity(left, left), pauli(axis));
    return kron(out, Matrix::Identity(right, right));
}

} // namespace detail

inline DenseOperator tfim_hamiltonian(const TfimSpec& spec) {
    if (spec.L < 2) throw std::invalid_argument("tfim_hamiltonian: chain length must be >= 2");
    if (spec.L > 12)
        throw resource_limit("tfim_hamiltonian: L > 12 exceeds the dense-feasibility guard");

    const Eigen::Index dim = Eigen::Index(1) << spec.L;
    Matrix h = Matrix::Zero(dim, dim);
    for (int k = 1; k <= spec.L; ++k) {
        h += spec.hx * detail::site_pauli(spec.L, k, Axis::x);
        h += spec.hz * detail::site_pauli(spec.L, k, Axis::z);
    }
    for (int k = 1; k < spec.L; ++k)
        h -= spec.J * detail::site_pauli(spec.L, k, Axis::z) * detail::site_pauli(spec.L, k + 1, Axis::z);
    return DenseOperator::hermitian(std::move(h));
}

/// S_axis = sum_k sigma_axis_k; commutes with the chain reflection.
inline DenseOperator collective_operator(int L, Axis axis) {
    if (L < 1) throw std::invalid_argument("collective_operator: L must be >= 1");
    const Eigen::Index dim = Eigen::Index(1) << L;
    Matrix s = Matrix::Zero(dim, dim);
    for (int k = 1; k <= L; ++k) s += detail::site_pauli(L, k, axis);
    return DenseOperator::hermitian(std::move(s));
}

/// Reflection about the chain centre as a permutation of basis states
/// (site k <-> site L+1-k).
inline DenseOperator parity_operator(int L) {
    const Eigen::Index dim = Eigen::Index(1) << L;
    Matrix p = Matrix::Zero(dim, dim);
    for (Eigen::Index s = 0; s < dim; ++s) {
        Eigen::Index rev = 0;
        for (int bit = 0; bit < L; ++bit)
            if (s & (Eigen::Index(1) << bit)) rev |= Eigen::Index(1) << (L - 1 - bit);
        p(rev, s) = 1.0;
    }
    return DenseOperator::unitary(std::move(p));
}

/// Isometry onto the positive-parity sector: columns are the normalized
/// symmetric combinations (|s> + P|s>)/norm over basis orbits, ordered by the
/// smaller index of each orbit. dim = (2^L + 2^ceil(L/2)) / 2.
inline Matrix parity_sector(int L) {
    const Eigen::Index dim = Eigen::Index(1) << L;
    const auto reflect = [L](Eigen::Index s) {
        Eigen::Index rev = 0;
        for (int bit = 0; bit < L; ++bit)
            if (s & (Eigen::Index(1) << bit)) rev |= Eigen::Index(1) << (L - 1 - bit);
        return rev;
    };

    std::vector<Eigen::Index> reps;
    for (Eigen::Index s = 0; s < dim; ++s)
        if (s <= reflect(s)) reps.push_back(s);

    Matrix v = Matrix::Zero(dim, static_cast<Eigen::Index>(reps.size()));
    for (std::size_t c = 0; c < reps.size(); ++c) {
        const Eigen::Index s = reps[c];
        const Eigen::Index rev = reflect(s);
        if (s == rev) {
            v(s, c) = 1.0;
        } else {
            v(s, c) = 1.0 / std::sqrt(2.0);
            v(rev, c) = 1.0 / std::sqrt(2.0);
        }
    }
    return v;
}

/// V^dag O V restricted to the positive-parity sector.
inline DenseOperator project_positive_parity(const DenseOperator& o, const Matrix& isometry) {
    if (o.dim() != isometry.rows())
        throw std::invalid_argument("project_positive_parity: dimension mismatch");
    Matrix proj = isometry.adjoint() * o.mat() * isometry;
    if (o.is_hermitian()) return DenseOperator::hermitian(std::move(proj));
    return DenseOperator(std::move(proj));
}

} // namespace krylov::models
