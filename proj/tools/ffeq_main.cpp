// ffeq: function-field equidistribution experiments.
//
// Builds the Galois orbit of a torsion base point for a sequence of orders,
// counts orbit mass inside a family of cylinder balls, cross-checks the
// closed-form counts, and writes one deterministic CSV.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ffeq/experiment.hpp"

int main(int argc, char** argv) {
    CLI::App app{"function-field equidistribution lab"};
    ffeq::ExperimentConfig cfg;
    std::string config_path;

    app.add_option("--p", cfg.p, "field characteristic, prime (default 2)");
    app.add_option("--e", cfg.e, "extension degree; the CLI text formats require 1");
    app.add_option("--rank", cfg.rank, "rank r of the torsion module (default 2)");
    app.add_option("--model", cfg.model, "Galois-image model \"P=<poly>,<poly>;m=<int>\"");
    app.add_option("--mode", cfg.mode, "orbit mode: minimal | full");
    app.add_option("--orders", cfg.orders,
                   "order sequence: tpowers:<max> | irred:<max> | list:<p1;p2;...> | "
                   "random:<count>:<maxdeg>:<seed>");
    app.add_option("--balls", cfg.balls, "cylinder family \"sum<=<N>\" over the radii sum");
    app.add_option("--base", cfg.base,
                   "base-point numerators \"<b_1>,...,<b_r>\" (default 1,0,...,0)");
    app.add_option("--precision", cfg.precision, "tail precision (0 = max(8, deepest radius))");
    app.add_option("--out", cfg.out, "output CSV path (default stdout)");
    app.add_option("--workers", cfg.workers, "OpenMP thread count (0 = library default)");
    app.add_option("--config", config_path, "config file with key = value lines; flags override");

    CLI11_PARSE(app, argc, argv);

    try {
        if (!config_path.empty()) {
            for (const auto& [key, value] : ffeq::read_config_file(config_path)) {
                const CLI::Option* opt = app.get_option_no_throw("--" + key);
                if (opt != nullptr && opt->count() > 0) continue;  // flag wins over file
                ffeq::apply_config_kv(cfg, key, value);
            }
        }
        const std::string csv = ffeq::run_experiment_csv(cfg);
        if (cfg.out.empty()) {
            std::cout << csv;
        } else {
            std::ofstream out(cfg.out, std::ios::binary);
            if (!out) throw std::runtime_error("cannot open output file: " + cfg.out);
            out << csv;
        }
    } catch (const std::exception& ex) {
        std::cerr << "ffeq: " << ex.what() << "\n";
        return 1;
    }
    return 0;
}
