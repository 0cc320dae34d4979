#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "krylov/core/errors.hpp"

namespace krylov::experiments {

/// Declarative description of one experiment run. Fields left unset fall
/// back to the chosen preset's defaults; `seed` has no default and must be
/// given. The on-disk format is flat `key = value` text with '#' comments.
struct ExperimentConfig {
    std::string preset;
    std::optional<uint64_t> seed;
    std::optional<int> ensemble_size;
    std::optional<int> n_steps;
    std::optional<double> t_max;

    std::optional<int> d;          // RMTE subsystem dimension
    std::optional<double> epsilon; // RMTE coupling
    std::optional<double> j;       // spin magnitude
    std::optional<double> kappa;   // kick strength
    std::optional<double> alpha;   // precession angle
    std::optional<int> L;          // chain length
    std::optional<double> J;       // Ising coupling
    std::optional<double> hx;
    std::optional<double> hz;

    std::vector<std::pair<double, double>> angles; // seed-condition (theta, phi) list
    std::vector<std::string> operators;            // e.g. jx, jy, jz or sx, sz
    std::vector<double> epsilons;                  // sweep lists
    std::vector<double> kappas;
    std::vector<double> hzs;

    std::string angle_law;  // "uniform" or "sphere" (ensemble angle sampling)
    std::string output_dir;
    int threads = 0;
    bool plots = true;
};

namespace detail {

inline std::string trim(std::string s) {
    const auto notspace = [](unsigned char c) { return !std::isspace(c); };
    s.erase(s.begin(), std::find_if(s.begin(), s.end(), notspace));
    s.erase(std::find_if(s.rbegin(), s.rend(), notspace).base(), s.end());
    return s;
}

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(trim(item));
    return out;
}

inline double parse_double(const std::string& key, const std::string& v) {
    try {
        std::size_t used = 0;
        const double x = std::stod(v, &used);
        if (used != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw validation_error(key + ": not a number: '" + v + "'");
    }
}

inline int parse_int(const std::string& key, const std::string& v) {
    const double x = parse_double(key, v);
    const int i = static_cast<int>(x);
    if (x != static_cast<double>(i)) throw validation_error(key + ": not an integer: '" + v + "'");
    return i;
}

inline uint64_t parse_u64(const std::string& key, const std::string& v) {
    uint64_t out = 0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || ptr != v.data() + v.size())
        throw validation_error(key + ": not an unsigned integer: '" + v + "'");
    return out;
}

} // namespace detail

/// Parse the flat key=value config format. Unknown keys are an error so
/// typos cannot silently fall back to defaults.
inline ExperimentConfig parse_config_text(const std::string& text) {
    using namespace detail;
    ExperimentConfig cfg;
    std::stringstream ss(text);
    std::string line;
    int lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw validation_error("config line " + std::to_string(lineno) +
                                   ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));

        if (key == "preset") cfg.preset = val;
        else if (key == "seed") cfg.seed = parse_u64(key, val);
        else if (key == "ensemble_size") cfg.ensemble_size = parse_int(key, val);
        else if (key == "n_steps") cfg.n_steps = parse_int(key, val);
        else if (key == "t_max") cfg.t_max = parse_double(key, val);
        else if (key == "d") cfg.d = parse_int(key, val);
        else if (key == "epsilon") cfg.epsilon = parse_double(key, val);
        else if (key == "j") cfg.j = parse_double(key, val);
        else if (key == "kappa") cfg.kappa = parse_double(key, val);
        else if (key == "alpha") cfg.alpha = parse_double(key, val);
        else if (key == "L") cfg.L = parse_int(key, val);
        else if (key == "J") cfg.J = parse_double(key, val);
        else if (key == "hx") cfg.hx = parse_double(key, val);
        else if (key == "hz") cfg.hz = parse_double(key, val);
        else if (key == "angle_law") cfg.angle_law = val;
        else if (key == "output_dir") cfg.output_dir = val;
        else if (key == "threads") cfg.threads = parse_int(key, val);
        else if (key == "plots") cfg.plots = parse_int(key, val) != 0;
        else if (key == "operators") cfg.operators = split(val, ',');
        else if (key == "epsilons" || key == "kappas" || key == "hzs") {
            std::vector<double> list;
            for (const auto& item : split(val, ',')) list.push_back(parse_double(key, item));
            if (key == "epsilons") cfg.epsilons = list;
            else if (key == "kappas") cfg.kappas = list;
            else cfg.hzs = list;
        } else if (key == "angles") {
            for (const auto& item : split(val, ',')) {
                const auto colon = item.find(':');
                if (colon == std::string::npos)
                    throw validation_error("angles: expected theta:phi pairs, got '" + item + "'");
                cfg.angles.emplace_back(parse_double("angles", trim(item.substr(0, colon))),
                                        parse_double("angles", trim(item.substr(colon + 1))));
            }
        } else {
            throw validation_error("unknown config key '" + key + "'");
        }
    }
    return cfg;
}

inline ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot read config file " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

/// Overlay user-provided fields on top of preset defaults.
inline ExperimentConfig merge_config(ExperimentConfig base, const ExperimentConfig& user) {
    if (!user.preset.empty()) base.preset = user.preset;
    if (user.seed) base.seed = user.seed;
    if (user.ensemble_size) base.ensemble_size = user.ensemble_size;
    if (user.n_steps) base.n_steps = user.n_steps;
    if (user.t_max) base.t_max = user.t_max;
    if (user.d) base.d = user.d;
    if (user.epsilon) base.epsilon = user.epsilon;
    if (user.j) base.j = user.j;
    if (user.kappa) base.kappa = user.kappa;
    if (user.alpha) base.alpha = user.alpha;
    if (user.L) base.L = user.L;
    if (user.J) base.J = user.J;
    if (user.hx) base.hx = user.hx;
    if (user.hz) base.hz = user.hz;
    if (!user.angles.empty()) base.angles = user.angles;
    if (!user.operators.empty()) base.operators = user.operators;
    if (!user.epsilons.empty()) base.epsilons = user.epsilons;
    if (!user.kappas.empty()) base.kappas = user.kappas;
    if (!user.hzs.empty()) base.hzs = user.hzs;
    if (!user.angle_law.empty()) base.angle_law = user.angle_law;
    if (!user.output_dir.empty()) base.output_dir = user.output_dir;
    if (user.threads > 0) base.threads = user.threads;
    base.plots = user.plots && base.plots;
    return base;
}

} // namespace krylov::experiments
