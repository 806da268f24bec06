#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "waring/cli.hpp"

int main(int argc, char** argv) {
    waring::cli::RunConfig config;
    CLI::App app{"Power-sum decompositions of the generic determinant"};
    app.set_version_flag("--version", waring::cli::kVersion);
    app.add_option("command", config.command, "decompose | verify | lemma-check | independence | symmetries | equations | bounds | bench")
        ->required();
    app.add_option("--d", config.d, "matrix size (bounds: largest size)");
    app.add_option("--scheme", config.scheme, "main | classical | gurvits | monomial | krishna-makam");
    app.add_option("--format", config.format, "json | latex | text");
    app.add_option("--prime", config.prime, "prime for the finite-field locus count");
    app.add_flag("--full", config.full, "exhaustive symmetry action / full-space locus enumeration");
    app.add_flag("--force", config.force, "lift the default size limits");
    app.add_option("--jobs", config.jobs, "worker threads, 0 for all cores");
    app.add_option("--seed", config.seed, "seed for sampled checks");
    app.add_option("--out", config.out, "write output to this file");
    app.add_option("--mode", config.mode, "verification route: expand | stream | both");
    app.add_option("--samples", config.samples, "elements drawn for sampled symmetry checks");
    app.add_flag("--timings", config.timings, "include wall-clock timings in reports");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n" << waring::cli::usage();
        return 2;
    }

    const auto result = waring::cli::run(config);
    std::cerr << result.diagnostics;
    if (config.out && result.exit_code != 2) {
        std::ofstream file(*config.out, std::ios::binary);
        if (!file) {
            std::cerr << "error: cannot open " << *config.out << "\n";
            return 2;
        }
        file << result.output;
    } else {
        std::cout << result.output;
    }
    return result.exit_code;
}
