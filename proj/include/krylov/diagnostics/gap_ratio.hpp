#pragma once

#include <algorithm>
#include <numbers>
#include <vector>

#include "krylov/core/types.hpp"

namespace krylov::diagnostics {

enum class SpectrumValues { energies, eigenphases };

/// Consecutive-spacing ratio statistics r_n = min(s_n, s_{n+1}) / max(...).
/// Unfolding-free by construction. Reference means: ~0.386 Poisson,
/// ~0.530 COE, ~0.599 CUE.
struct GapRatioStats {
    std::vector<double> ratios;
    double mean = 0.0;
    int skipped = 0; // pairs dropped because a spacing was exactly zero
};

/// For eigenphases the wrap-around spacing 2*pi - (phi_max - phi_min) is
/// included and ratios are taken cyclically, so all d spacings on the circle
/// enter the statistics.
inline GapRatioStats mean_gap_ratio(std::vector<double> values, SpectrumValues kind) {
    if (values.size() < 3)
        throw degenerate_input("mean_gap_ratio: need at least 3 values");
    std::sort(values.begin(), values.end());

    std::vector<double> spacings;
    spacings.reserve(values.size());
    for (std::size_t i = 1; i < values.size(); ++i)
        spacings.push_back(values[i] - values[i - 1]);
    const bool cyclic = kind == SpectrumValues::eigenphases;
    if (cyclic)
        spacings.push_back(2.0 * std::numbers::pi - (values.back() - values.front()));

    GapRatioStats stats;
    const std::size_t n_pairs = cyclic ? spacings.size() : spacings.size() - 1;
    for (std::size_t i = 0; i < n_pairs; ++i) {
        const double s0 = spacings[i];
        const double s1 = spacings[(i + 1) % spacings.size()];
        const double hi = std::max(s0, s1);
        if (hi <= 0.0) {
            ++stats.skipped;
            continue;
        }
        stats.ratios.push_back(std::min(s0, s1) / hi);
    }
    if (stats.ratios.empty())
        throw degenerate_input("mean_gap_ratio: all spacing pairs degenerate");
    double sum = 0.0;
    for (const double r : stats.ratios) sum += r;
    stats.mean = sum / static_cast<double>(stats.ratios.size());
    return stats;
}

inline GapRatioStats mean_gap_ratio(const RealVector& values, SpectrumValues kind) {
    return mean_gap_ratio(std::vector<double>(values.data(), values.data() + values.size()), kind);
}

} // namespace krylov::diagnostics
