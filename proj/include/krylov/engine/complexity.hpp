#pragma once

#include <cmath>

#include "krylov/core/eigensystem.hpp"
#include "krylov/core/operator_space.hpp"
#include "krylov/core/types.hpp"
#include "krylov/engine/krylov_basis.hpp"

namespace krylov {

/// Complexity time series K_C(t) = sum_n n |phi_n(t)|^2 over a Krylov basis.
/// `times` holds stroboscopic step numbers for Floquet runs and the real time
/// grid for Hamiltonian runs. When requested, `amplitudes` column j stores
/// the probability vector |phi_n(t_j)|^2.
struct ComplexitySeries {
    RealVector times;
    RealVector values;
    Eigen::MatrixXd amplitudes; // n_basis x n_times, empty unless requested
};

namespace detail {

inline double weighted_index(const Vector& amps) {
    double kc = 0.0;
    for (Eigen::Index n = 1; n < amps.size(); ++n) kc += static_cast<double>(n) * std::norm(amps(n));
    return kc;
}

} // namespace detail

/// K_C at stroboscopic steps 0..n_steps under the map that generated `basis`.
/// `apply_u` must be the same map (state or folded operator coordinates).
template <class Apply>
ComplexitySeries complexity_series_floquet(Apply&& apply_u, const Vector& seed,
                                           const KrylovBasis& basis, int n_steps,
                                           bool keep_amplitudes = false) {
    const double seed_norm = seed.norm();
    if (!(seed_norm > 1e-14)) throw degenerate_input("complexity_series_floquet: zero seed");
    if (seed.size() != basis.vectors.rows())
        throw std::invalid_argument("complexity_series_floquet: seed does not match basis space");
    if (std::abs(std::abs((basis.vectors.col(0).adjoint() * seed).value()) - seed_norm) >
        1e-8 * seed_norm)
        throw std::invalid_argument("complexity_series_floquet: basis was not built from this seed");

    ComplexitySeries s;
    s.times.resize(n_steps + 1);
    s.values.resize(n_steps + 1);
    if (keep_amplitudes) s.amplitudes.resize(basis.size(), n_steps + 1);

    Vector psi = seed / seed_norm;
    for (int j = 0; j <= n_steps; ++j) {
        const Vector amps = basis.vectors.adjoint() * psi;
        s.times(j) = j;
        s.values(j) = detail::weighted_index(amps);
        if (keep_amplitudes) s.amplitudes.col(j) = amps.cwiseAbs2();
        if (j < n_steps) psi = apply_u(psi);
    }
    return s;
}

inline ComplexitySeries complexity_series_floquet_state(const DenseOperator& u,
                                                        const StateVector& seed,
                                                        const KrylovBasis& basis, int n_steps,
                                                        bool keep_amplitudes = false) {
    return complexity_series_floquet(
        [&u](const Vector& v) -> Vector { return u.mat() * v; },
        seed.amplitudes(), basis, n_steps, keep_amplitudes);
}

inline ComplexitySeries complexity_series_floquet_operator(const DenseOperator& u,
                                                           const DenseOperator& seed_op,
                                                           const KrylovBasis& basis, int n_steps,
                                                           bool keep_amplitudes = false) {
    const int d = u.dim();
    auto apply = [&u, d](const Vector& v) -> Vector {
        const Eigen::Map<const Matrix> o(v.data(), d, d);
        const Matrix c = u.mat().adjoint() * o * u.mat();
        return Eigen::Map<const Vector>(c.data(), c.size());
    };
    return complexity_series_floquet(apply, fold_operator(seed_op.mat()), basis, n_steps,
                                     keep_amplitudes);
}

/// Heisenberg-picture operator complexity under a Hermitian H on an arbitrary
/// time grid. Evolution is exact through the eigensystem of H:
/// O(t) = e^{iHt} O e^{-iHt}.
inline ComplexitySeries complexity_series_hamiltonian(const Eigensystem& eig,
                                                      const DenseOperator& seed_op,
                                                      const KrylovBasis& basis,
                                                      const RealVector& times,
                                                      bool keep_amplitudes = false) {
    const int d = seed_op.dim();
    if (eig.dim() != d)
        throw std::invalid_argument("complexity_series_hamiltonian: eigensystem/seed dimension mismatch");
    if (basis.vectors.rows() != static_cast<Eigen::Index>(d) * d)
        throw std::invalid_argument("complexity_series_hamiltonian: basis is not an operator basis of this space");

    const Vector seed_folded = fold_operator(seed_op.mat());
    const double seed_norm = seed_folded.norm();
    if (std::abs(std::abs((basis.vectors.col(0).adjoint() * seed_folded).value()) - seed_norm) >
        1e-8 * seed_norm)
        throw std::invalid_argument("complexity_series_hamiltonian: basis was not built from this seed");

    // Seed in the eigenbasis; phases advance entrywise with the energy gaps.
    const Matrix seed_eig = eig.vectors.adjoint() * seed_op.mat() * eig.vectors;

    const Eigen::Index nt = times.size();
    ComplexitySeries s;
    s.times = times;
    s.values.resize(nt);
    if (keep_amplitudes) s.amplitudes.resize(basis.size(), nt);

    Matrix phased(d, d);
    for (Eigen::Index j = 0; j < nt; ++j) {
        const double t = times(j);
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b)
                phased(a, b) = seed_eig(a, b) * std::polar(1.0, (eig.values(a) - eig.values(b)) * t);
        const Matrix ot = eig.vectors * phased * eig.vectors.adjoint();
        const Vector amps = basis.vectors.adjoint() * (fold_operator(ot) / seed_norm);
        s.values(j) = detail::weighted_index(amps);
        if (keep_amplitudes) s.amplitudes.col(j) = amps.cwiseAbs2();
    }
    return s;
}

inline ComplexitySeries complexity_series_hamiltonian(const DenseOperator& h,
                                                      const DenseOperator& seed_op,
                                                      const KrylovBasis& basis,
                                                      const RealVector& times,
                                                      bool keep_amplitudes = false) {
    return complexity_series_hamiltonian(eigensystem(h, SpectrumKind::hermitian), seed_op, basis,
                                         times, keep_amplitudes);
}

/// Mean of values over the index window [first, last] (inclusive).
inline double windowed_average(const ComplexitySeries& s, Eigen::Index first, Eigen::Index last) {
    if (first < 0 || last >= s.values.size() || first > last)
        throw std::invalid_argument("windowed_average: bad index window");
    return s.values.segment(first, last - first + 1).mean();
}

/// Post-saturation average: the last 80% of the run. Comparisons of
/// saturation levels should use runs of at least 500 recorded steps.
inline double saturation_average(const ComplexitySeries& s) {
    const Eigen::Index n = s.values.size();
    if (n < 2) throw degenerate_input("saturation_average: series too short");
    return windowed_average(s, n / 5, n - 1);
}

} // namespace krylov
