// Command-line experiment runner for the Krylov complexity toolkit.
//
// Subcommands:
//   run           execute a preset (from --preset and/or a config file)
//   list-presets  show the available presets
//   validate      parse and validate a config without running it
//
// Output directory precedence: --out, then $KRYLOV_OUT, then the config
// file's output_dir, then the preset default ("results").
//
// Exit codes: 0 success, 2 usage, 3 validation, 4 io, 5 numerical failure.

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "krylov/experiments/runner.hpp"

namespace kexp = krylov::experiments;

namespace {

struct CliOptions {
    std::string config_path;
    std::string preset;
    std::string out_dir;
    uint64_t seed = 0;
    bool seed_given = false;
    int threads = 0;
    bool no_plots = false;
};

kexp::ExperimentConfig assemble_config(const CliOptions& opt) {
    kexp::ExperimentConfig cfg;
    if (!opt.config_path.empty()) cfg = kexp::load_config(opt.config_path);
    if (!opt.preset.empty()) cfg.preset = opt.preset;
    if (opt.seed_given) cfg.seed = opt.seed;
    if (opt.threads > 0) cfg.threads = opt.threads;
    if (opt.no_plots) cfg.plots = false;

    if (!opt.out_dir.empty()) {
        cfg.output_dir = opt.out_dir;
    } else if (const char* env = std::getenv("KRYLOV_OUT"); env && *env) {
        cfg.output_dir = env;
    }
    if (cfg.preset.empty())
        throw krylov::usage_error("no preset selected: pass --preset or a config with a preset key");
    return cfg;
}

int run_command(const CliOptions& opt) {
    const kexp::ExperimentConfig cfg = assemble_config(opt);
    const kexp::RunManifest manifest = kexp::run(cfg);
    std::printf("preset %s done in %.2f s, %zu files -> %s\n", manifest.preset.c_str(),
                manifest.wall_time_s, manifest.files.size(),
                cfg.output_dir.empty() ? "results" : cfg.output_dir.c_str());
    return 0;
}

int validate_command(const CliOptions& opt) {
    const kexp::ExperimentConfig cfg = assemble_config(opt);
    const kexp::ExperimentConfig resolved = kexp::resolve_config(cfg);
    std::printf("config ok: preset %s, seed %llu\n", resolved.preset.c_str(),
                static_cast<unsigned long long>(*resolved.seed));
    return 0;
}

int list_presets_command() {
    for (const auto& p : kexp::preset_list())
        std::printf("%-20s %s\n", p.name.c_str(), p.description.c_str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Krylov complexity experiment runner"};
    app.require_subcommand(1);

    CliOptions opt;

    auto* run_cmd = app.add_subcommand("run", "execute a preset experiment");
    run_cmd->add_option("--config", opt.config_path, "config file (flat key = value text)");
    run_cmd->add_option("--preset", opt.preset, "preset name (overrides the config)");
    run_cmd->add_option("--seed", opt.seed, "master seed (overrides the config)")
        ->each([&opt](const std::string&) { opt.seed_given = true; });
    run_cmd->add_option("--out", opt.out_dir, "output directory");
    run_cmd->add_option("--threads", opt.threads, "worker threads (default: hardware)");
    run_cmd->add_flag("--no-plots", opt.no_plots, "skip SVG emission");

    auto* validate_cmd = app.add_subcommand("validate", "validate a config without running");
    validate_cmd->add_option("--config", opt.config_path, "config file")->required();
    validate_cmd->add_option("--preset", opt.preset, "preset name (overrides the config)");
    validate_cmd->add_option("--seed", opt.seed, "master seed")
        ->each([&opt](const std::string&) { opt.seed_given = true; });

    auto* list_cmd = app.add_subcommand("list-presets", "show the available presets");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (run_cmd->parsed()) return run_command(opt);
        if (validate_cmd->parsed()) return validate_command(opt);
        if (list_cmd->parsed()) return list_presets_command();
        return 2;
    } catch (const krylov::usage_error& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return 2;
    } catch (const krylov::io_error& e) {
        std::fprintf(stderr, "io error: %s\n", e.what());
        return 4;
    } catch (const krylov::numerical_failure& e) {
        std::fprintf(stderr, "numerical failure: %s\n", e.what());
        return 5;
    } catch (const krylov::resource_limit& e) {
        std::fprintf(stderr, "validation error: %s\n", e.what());
        return 3;
    } catch (const std::invalid_argument& e) {
        // validation_error, degenerate_input, and contract violations
        std::fprintf(stderr, "validation error: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 5;
    }
}
