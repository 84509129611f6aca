// spreadsim: batch front door for multilayer spreading experiments.
//
// Subcommands:
//   validate <config.json>   check a run config, print a summary
//   run      <config.json>   execute the experiment and write the report bundle
//   bench    [flags]         time single-process SIR runs over G(n,p) graphs
//
// Exit codes: 0 success, 1 missing input file, 2 invalid config/arguments,
// 3 runtime I/O failure.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spread/bench.hpp"
#include "spread/config.hpp"
#include "spread/engine.hpp"
#include "spread/error.hpp"
#include "spread/logger.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kMissingInput = 1;
constexpr int kInvalid = 2;
constexpr int kIoFailure = 3;

// Loads and fully validates a config. On success fills `config`/`built` and
// returns kOk; otherwise prints diagnostics to stderr and returns the code.
int prepare(const std::string& path, spread::RunConfig& config,
            std::optional<spread::BuiltExperiment>& built) {
    if (!std::filesystem::exists(path)) {
        std::cerr << "error: no such file '" << path << "'\n";
        return kMissingInput;
    }
    try {
        config = spread::load_run_config(path);
    } catch (const spread::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    }
    std::vector<std::string> diagnostics = spread::validate_run_config(config, &built);
    if (!diagnostics.empty()) {
        for (const std::string& d : diagnostics) std::cerr << "error: " << d << "\n";
        return kInvalid;
    }
    return kOk;
}

int cmd_validate(const std::string& path) {
    spread::RunConfig config;
    std::optional<spread::BuiltExperiment> built;
    int status = prepare(path, config, built);
    if (status != kOk) return status;
    std::cout << "config OK\n" << spread::config_summary(config, *built);
    return kOk;
}

int cmd_run(const std::string& path) {
    spread::RunConfig config;
    std::optional<spread::BuiltExperiment> built;
    int status = prepare(path, config, built);
    if (status != kOk) return status;

    try {
        spread::Simulation sim(built->net, built->model);
        spread::ExperimentLog log = sim.perform_propagation(config.experiment);
        spread::write_report(log, config.output_dir);
        std::cout << "wrote " << config.output_dir << "\n"
                  << "total transitions: " << log.total_transitions() << "\n";
    } catch (const spread::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIoFailure;
    } catch (const spread::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    }
    return kOk;
}

int cmd_bench(const spread::BenchOptions& options, const std::string& out_path) {
    std::vector<spread::TimingRow> rows;
    try {
        rows = spread::run_benchmark(options);
    } catch (const spread::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    }
    spread::print_timing_table(rows, std::cout);
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open '" << out_path << "' for writing\n";
        return kIoFailure;
    }
    out << spread::timing_csv(rows);
    if (!out) {
        std::cerr << "error: write to '" << out_path << "' failed\n";
        return kIoFailure;
    }
    std::cout << "wrote " << out_path << "\n";
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"multilayer spreading simulator"};
    app.require_subcommand(1);

    std::string config_path;
    CLI::App* validate = app.add_subcommand("validate", "check a run config");
    validate->add_option("config", config_path, "path to the JSON run config")
        ->required();

    CLI::App* run = app.add_subcommand("run", "execute an experiment");
    run->add_option("config", config_path, "path to the JSON run config")->required();

    spread::BenchOptions options;
    options.sizes = {200, 400, 800};
    std::string bench_out = "bench.csv";
    CLI::App* bench = app.add_subcommand("bench", "time SIR runs over G(n,p) graphs");
    bench->add_option("--sizes", options.sizes, "ascending graph sizes")
        ->delimiter(',');
    bench->add_option("--p", options.p, "edge probability");
    bench->add_option("--reps", options.repetitions, "repetitions per size");
    bench->add_option("--epochs", options.epochs, "epochs per run");
    bench->add_option("--seed", options.seed, "master seed");
    bench->add_option("--out", bench_out, "timing CSV path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInvalid;
    }

    if (validate->parsed()) return cmd_validate(config_path);
    if (run->parsed()) return cmd_run(config_path);
    return cmd_bench(options, bench_out);
}
