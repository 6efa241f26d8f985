#include <cstdio>
#include <exception>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "vat/config.hpp"
#include "vat/errors.hpp"
#include "vat/experiments.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitConfig = 2;

struct CliOptions {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<long> trials;
    std::optional<std::string> out_dir;
};

int run(vat::Experiment experiment, const CliOptions& options) {
    vat::RunConfig config;
    try {
        if (!options.config_path.empty()) config = vat::load_config(options.config_path);
        config.experiment = experiment;
        if (options.seed) config.master_seed = *options.seed;
        if (options.trials) {
            if (*options.trials < 1) throw vat::ConfigError("--trials must be >= 1");
            config.trials = *options.trials;
        }
        if (options.out_dir) config.output_dir = *options.out_dir;
    } catch (const vat::ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return kExitConfig;
    }

    try {
        const vat::RunArtifacts artifacts = vat::run_experiment(config);
        std::fputs(artifacts.summary.c_str(), stdout);
        for (const auto& file : artifacts.files)
            std::fprintf(stdout, "wrote %s\n", file.string().c_str());
        return kExitOk;
    } catch (const vat::ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return kExitConfig;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitRuntime;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "vat-sim - vibration-assisted tunneling simulator.\n"
        "Deterministic: the master seed fixes every output byte.\n"
        "Set VAT_WORKERS to bound the worker thread count (results do not depend on it)."};
    app.require_subcommand(1);

    CliOptions options;
    vat::Experiment chosen = vat::Experiment::Trace;

    const struct {
        vat::Experiment experiment;
        const char* description;
    } subcommands[] = {
        {vat::Experiment::Trace, "Elongation time series of one sampled heat bath"},
        {vat::Experiment::AmplitudeTrace, "Elongation plus log tunnel-amplitude trace"},
        {vat::Experiment::Selection, "Two-channel left/right selection experiments"},
        {vat::Experiment::BornMC, "Gumbel-pair Monte Carlo vs the closed-form win probability"},
        {vat::Experiment::Ensemble, "Multi-observer summed-extrema scaling"},
        {vat::Experiment::GumbelFit, "Per-window maxima vs the Gumbel law"},
        {vat::Experiment::Estimates, "Closed-form scalar estimates"},
    };

    for (const auto& sub : subcommands) {
        CLI::App* cmd =
            app.add_subcommand(std::string(vat::experiment_name(sub.experiment)), sub.description);
        cmd->add_option("--config", options.config_path, "Flat key = value configuration file");
        cmd->add_option("--seed", options.seed, "Master seed (overrides config)");
        cmd->add_option("--trials", options.trials, "Trial count (overrides config)");
        cmd->add_option("--out", options.out_dir, "Output directory (overrides config)");
        cmd->callback([&chosen, experiment = sub.experiment] { chosen = experiment; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    return run(chosen, options);
}
