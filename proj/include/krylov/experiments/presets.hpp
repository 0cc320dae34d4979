#pragma once

#include <numbers>
#include <string>
#include <vector>

#include "krylov/experiments/config.hpp"

namespace krylov::experiments {

struct PresetInfo {
    std::string name;
    std::string description;
};

inline const std::vector<PresetInfo>& preset_list() {
    static const std::vector<PresetInfo> presets = {
        {"fig1a", "RMTE state complexity for rotated-eigenvector seeds of different IPR"},
        {"fig1b", "fixed-IPR uniform-superposition seed across coupling strengths"},
        {"fig1c", "kicked-top coherent-state complexity, three seeds"},
        {"fig1d", "kicked-top single-spin linear entropy for the fig1c seeds"},
        {"fig2a", "RMTE operator complexity for rotated-dynamics seeds"},
        {"fig2b", "kicked-top operator complexity for jx, jy, jz"},
        {"fig2c", "kicked-top infinite-temperature OTOC for jx, jy, jz"},
        {"fig3a", "TFIM ensemble-averaged operator complexity, chaotic vs regular"},
        {"fig3b", "kicked-top ensemble-averaged state complexity across kick strengths"},
        {"fig3c", "variance of Arnoldi coefficients vs kick strength"},
        {"supp_level_spacing", "RMTE mean gap ratio vs coupling strength"},
        {"supp_tfim_flip", "TFIM complexity saturation flip between Sz and Sx seeds"},
        {"ipr_table", "TFIM operator IPR table (Sx, Sz at three hz values)"},
        {"identity_checks", "variance identity, coefficient cross-checks, late-time formula"},
    };
    return presets;
}

inline bool is_known_preset(const std::string& name) {
    for (const auto& p : preset_list())
        if (p.name == name) return true;
    return false;
}

/// Fully populated defaults per preset; user config overlays these.
inline ExperimentConfig preset_defaults(const std::string& name) {
    constexpr double half_pi = std::numbers::pi / 2.0;
    ExperimentConfig c;
    c.preset = name;
    c.angle_law = "uniform";
    c.output_dir = "results";

    if (name == "fig1a") {
        c.d = 5;
        c.epsilon = 1.0;
        c.n_steps = 1000;
        c.angles = {{0.0, 0.8}, {0.04, 0.8}, {0.09, 0.8}, {0.2, 0.8}};
    } else if (name == "fig1b") {
        c.d = 5;
        c.n_steps = 1000;
        c.epsilons = {0.1, 0.3, 0.5, 1.0};
    } else if (name == "fig1c" || name == "fig1d") {
        c.j = 15.0;
        c.kappa = 6.0;
        c.alpha = half_pi;
        c.n_steps = name == "fig1c" ? 600 : 300;
        c.angles = {{1.5, 1.0}, {0.25, 0.6}, {1.25, 0.7}};
    } else if (name == "fig2a") {
        c.d = 5;
        c.epsilon = 1.0;
        c.n_steps = 600;
        c.angles = {{0.0, 0.8}, {0.015, 0.8}, {0.04, 0.8}, {0.1, 0.8}};
    } else if (name == "fig2b" || name == "fig2c") {
        c.j = 15.0;
        c.kappa = 6.0;
        c.alpha = half_pi;
        c.n_steps = 200;
        c.operators = {"jx", "jy", "jz"};
    } else if (name == "fig3a") {
        c.L = 6;
        c.J = 1.0;
        c.hx = 1.0;
        c.hzs = {0.2, 2.5};
        c.ensemble_size = 100;
        c.n_steps = 500;
        c.t_max = 200.0;
    } else if (name == "fig3b") {
        c.j = 10.0;
        c.alpha = half_pi;
        c.kappas = {0.5, 2.0, 6.0};
        c.ensemble_size = 100;
        c.n_steps = 500;
    } else if (name == "fig3c") {
        c.j = 10.0;
        c.alpha = half_pi;
        c.kappas = {0.5, 1.0, 2.0, 3.0, 4.0, 5.0, 6.0};
        c.ensemble_size = 100;
    } else if (name == "supp_level_spacing") {
        c.d = 5;
        c.epsilons = {0.0, 0.2, 0.4, 0.6, 0.8, 1.0};
        c.ensemble_size = 200;
    } else if (name == "supp_tfim_flip") {
        c.L = 6;
        c.J = 1.0;
        c.hx = 1.0;
        c.hzs = {0.2, 2.5};
        c.operators = {"sz", "sx"};
        c.n_steps = 500;
        c.t_max = 200.0;
    } else if (name == "ipr_table") {
        c.L = 6;
        c.J = 1.0;
        c.hx = 1.0;
        c.hzs = {0.2, 1.35, 2.5};
        c.operators = {"sx", "sz"};
    } else if (name == "identity_checks") {
        c.d = 5;
        c.epsilon = 1.0;
        c.n_steps = 1000;
        c.ensemble_size = 100;
    } else {
        std::string known;
        for (const auto& p : preset_list()) known += " " + p.name;
        throw usage_error("unknown preset '" + name + "'; available presets:" + known);
    }
    return c;
}

} // namespace krylov::experiments
