#include <cstdint>
#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <omp.h>

#include "floq/errors.hpp"
#include "floq/experiments.hpp"

int main(int argc, char** argv) {
    CLI::App app{"floqlab - driven many-body Floquet statistics laboratory"};

    std::string config_path;
    std::string output_dir;
    int threads = 0;
    uint64_t seed = 0;
    bool seed_set = false;

    app.add_option("--config", config_path, "experiment config file (key = value)")
        ->required();
    app.add_option("--output", output_dir, "output directory (overrides config)");
    app.add_option("--threads", threads, "OpenMP thread count (0 = runtime default)");
    app.add_option_function<uint64_t>(
           "--seed", [&](uint64_t s) { seed = s; seed_set = true; },
           "master seed (overrides config)");

    CLI11_PARSE(app, argc, argv);

    try {
        floq::ExperimentConfig config = floq::ExperimentConfig::from_file(config_path);
        if (!output_dir.empty()) config.output_dir = output_dir;
        if (seed_set) config.master_seed = seed;
        if (threads > 0) config.threads = threads;
        if (config.threads > 0) omp_set_num_threads(config.threads);
        floq::run_experiment(config);
    } catch (const floq::config_error& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
