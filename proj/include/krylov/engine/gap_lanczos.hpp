#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "krylov/core/eigensystem.hpp"
#include "krylov/core/operator_space.hpp"
#include "krylov/core/types.hpp"
#include "krylov/engine/complexity.hpp"
#include "krylov/engine/lanczos.hpp"

namespace krylov {

/// Reduced coordinates for Liouvillian Krylov runs under a Hermitian H.
///
/// In the eigenbasis of H the Liouvillian [H, .] is diagonal on the
/// eigen-operators |a><b| with eigenvalues E_a - E_b. Every Lanczos vector is
/// a polynomial in the Liouvillian applied to the seed, so each group of
/// exactly coinciding gaps contributes at most one Krylov direction:
/// collapsing the gaps to one real coordinate per distinct value (weighted by
/// the seed's content) reproduces the full-space recurrence coefficients and
/// complexity series exactly, at a fraction of the cost. Cross-checked
/// against lanczos_operator in the test suite.
struct GapSpectrumKrylov {
    RealVector omegas;       // distinct Liouvillian eigenvalues, ascending
    RealVector seed_coords;  // seed amplitude per gap group, >= 0, unit norm
    Eigen::MatrixXd basis;   // reduced Krylov vectors, columns K_0 ...
    RealVector a, b;
    Termination termination = Termination::breakdown;

    // expansion data: seed in the H eigenbasis and each entry's gap group
    Matrix seed_eig;
    Eigen::MatrixXi group;
    Matrix eigvectors;

    int size() const { return static_cast<int>(basis.cols()); }
};

/// Lanczos of the Liouvillian of `eig` with operator seed `seed_op`, run in
/// reduced gap coordinates. Gaps closer than 1e-10 x spectral width are
/// merged (for a non-degenerate spectrum this merges only the d exact zeros).
inline GapSpectrumKrylov gap_lanczos(const Eigensystem& eig, const DenseOperator& seed_op,
                                     const KrylovOptions& opt = {}) {
    const int d = eig.dim();
    if (seed_op.dim() != d)
        throw std::invalid_argument("gap_lanczos: seed dimension does not match eigensystem");

    GapSpectrumKrylov out;
    out.eigvectors = eig.vectors;
    out.seed_eig = eig.vectors.adjoint() * seed_op.mat() * eig.vectors;
    out.seed_eig /= out.seed_eig.norm(); // Euclidean = scaled HS up to the common factor

    // Collect all gaps, sort, merge equal values.
    struct Entry {
        double omega;
        int a, b;
    };
    std::vector<Entry> entries;
    entries.reserve(static_cast<std::size_t>(d) * d);
    double width = 0.0;
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            entries.push_back({eig.values(a) - eig.values(b), a, b});
            width = std::max(width, std::abs(entries.back().omega));
        }
    std::sort(entries.begin(), entries.end(),
              [](const Entry& x, const Entry& y) { return x.omega < y.omega; });
    const double merge_tol = 1e-10 * std::max(1.0, width);

    out.group.resize(d, d);
    std::vector<double> omegas;
    std::vector<double> weights;
    for (const Entry& e : entries) {
        if (omegas.empty() || e.omega - omegas.back() > merge_tol) {
            omegas.push_back(e.omega);
            weights.push_back(0.0);
        }
        const int g = static_cast<int>(omegas.size()) - 1;
        out.group(e.a, e.b) = g;
        weights[g] += std::norm(out.seed_eig(e.a, e.b));
    }

    const int m = static_cast<int>(omegas.size());
    out.omegas = Eigen::Map<const RealVector>(omegas.data(), m);
    out.seed_coords.resize(m);
    for (int k = 0; k < m; ++k) out.seed_coords(k) = std::sqrt(weights[k]);

    auto apply = [&out](const Eigen::VectorXd& v) -> Eigen::VectorXd {
        return out.omegas.cwiseProduct(v);
    };
    auto core = detail::lanczos_core<Eigen::MatrixXd, Eigen::VectorXd>(apply, out.seed_coords, opt);
    out.basis = std::move(core.basis);
    out.a = Eigen::Map<const RealVector>(core.a.data(), static_cast<Eigen::Index>(core.a.size()));
    out.b = Eigen::Map<const RealVector>(core.b.data(), static_cast<Eigen::Index>(core.b.size()));
    out.termination = core.termination;
    return out;
}

/// Full-space Krylov vector n as a DenseOperator (for cross-checks).
inline DenseOperator gap_krylov_operator(const GapSpectrumKrylov& g, int n) {
    const int d = static_cast<int>(g.seed_eig.rows());
    Matrix k = Matrix::Zero(d, d);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            const int grp = g.group(a, b);
            const double u = g.seed_coords(grp);
            if (u > 0.0) k(a, b) = g.seed_eig(a, b) * g.basis(grp, n) / u;
        }
    const Matrix back = g.eigvectors * k * g.eigvectors.adjoint();
    return DenseOperator(unfold_operator(Eigen::Map<const Vector>(back.data(), back.size()),
                                         d)); // already unit in folded coords
}

/// K_C(t) on an arbitrary time grid from the reduced representation:
/// phi_n(t) = sum_k Q(k, n) u_k e^{i omega_k t}.
inline ComplexitySeries complexity_series_gap(const GapSpectrumKrylov& g, const RealVector& times,
                                              bool keep_amplitudes = false) {
    const Eigen::Index nt = times.size();
    const Eigen::Index m = g.omegas.size();
    const Eigen::Index dk = g.basis.cols();

    ComplexitySeries s;
    s.times = times;
    s.values.resize(nt);
    if (keep_amplitudes) s.amplitudes.resize(dk, nt);

    Eigen::MatrixXd yre(m, nt), yim(m, nt);
    for (Eigen::Index j = 0; j < nt; ++j)
        for (Eigen::Index k = 0; k < m; ++k) {
            const double ph = g.omegas(k) * times(j);
            yre(k, j) = g.seed_coords(k) * std::cos(ph);
            yim(k, j) = g.seed_coords(k) * std::sin(ph);
        }
    const Eigen::MatrixXd fre = g.basis.transpose() * yre;
    const Eigen::MatrixXd fim = g.basis.transpose() * yim;

    for (Eigen::Index j = 0; j < nt; ++j) {
        double kc = 0.0;
        for (Eigen::Index n = 1; n < dk; ++n)
            kc += static_cast<double>(n) * (fre(n, j) * fre(n, j) + fim(n, j) * fim(n, j));
        s.values(j) = kc;
        if (keep_amplitudes)
            s.amplitudes.col(j) =
                (fre.col(j).array().square() + fim.col(j).array().square()).matrix();
    }
    return s;
}

} // namespace krylov
