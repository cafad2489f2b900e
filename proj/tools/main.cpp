#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "simplexkit/cli.hpp"

namespace sk = simplexkit;

int main(int argc, char** argv) {
    CLI::App app{"Geometry of m-simplices in R^n: medians, enclosing balls, radii and bisection"};
    app.require_subcommand(1);

    sk::cli::AnalyzeOptions analyze;
    auto* analyze_cmd = app.add_subcommand("analyze", "Median, metric and enclosure report for simplex files");
    analyze_cmd->add_option("files", analyze.paths, "Simplex files ({\"vertices\": [[...], ...]})")->required();

    sk::cli::EncloseOptions enclose;
    auto* enclose_cmd = app.add_subcommand("enclose", "Minimum enclosing ball of a point set with bounds");
    enclose_cmd->add_option("file", enclose.path, "Point-set file ({\"points\": [[...], ...]})")->required();
    std::size_t enclose_n = 0;
    enclose_cmd->add_option("--n", enclose_n, "Ambient dimension (default: from the file)")->check(CLI::PositiveNumber);
    enclose_cmd->add_flag("--variant-jung", enclose.variant_jung, "Barycentric circumradius over (n+1)-subsets");
    enclose_cmd->add_flag("--bw-check", enclose.bw_check, "Compare subset balls with the full ball");

    sk::cli::SolveOptions solve;
    std::string trace_path;
    auto* solve_cmd = app.add_subcommand("solve", "Root finding by longest-edge bisection");
    solve_cmd->add_option("function", solve.function, "Built-in system name")->required();
    solve_cmd->add_option("file", solve.path, "Starting simplex file")->required();
    solve_cmd->add_option("--tol", solve.tol, "Stop when the error estimate is below this")->capture_default_str();
    solve_cmd->add_option("--max-iter", solve.max_iter, "Bisection limit")->capture_default_str();
    solve_cmd->add_option("--trace", trace_path, "Write one JSON line per step to this file");

    sk::cli::RegularOptions regular;
    auto* regular_cmd = app.add_subcommand("regular", "Closed forms against computed values for a regular simplex");
    regular_cmd->add_option("m", regular.m, "Simplex order")->required();
    regular_cmd->add_option("n", regular.n, "Ambient dimension")->required();
    regular_cmd->add_option("diam", regular.diam, "Edge length")->capture_default_str();

    sk::CorpusOptions corpus;
    std::size_t corpus_m = 0;
    std::size_t corpus_n = 0;
    auto* corpus_cmd = app.add_subcommand("corpus", "Seeded random simplices, one JSON document per line");
    corpus_cmd->add_option("--seed", corpus.seed, "Seed (SIMPLEX_SEED overrides)")->capture_default_str();
    corpus_cmd->add_option("--count", corpus.count, "Number of simplices")->capture_default_str();
    corpus_cmd->add_option("--m", corpus_m, "Fixed order (default: random)")->check(CLI::PositiveNumber);
    corpus_cmd->add_option("--n", corpus_n, "Fixed ambient dimension (default: random)")->check(CLI::PositiveNumber);
    corpus_cmd->add_option("--coord-range", corpus.coord_range, "Coordinates in [-r, r]")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : sk::cli::exit_code::kUsage;
    }

    sk::cli::CommandResult result;
    if (*analyze_cmd) {
        result = sk::cli::run_analyze(analyze);
    } else if (*enclose_cmd) {
        if (enclose_cmd->count("--n")) enclose.n = enclose_n;
        result = sk::cli::run_enclose(enclose);
    } else if (*solve_cmd) {
        if (!trace_path.empty()) solve.trace_path = trace_path;
        result = sk::cli::run_solve(solve);
    } else if (*regular_cmd) {
        result = sk::cli::run_regular(regular);
    } else {
        if (corpus_cmd->count("--m")) corpus.m = corpus_m;
        if (corpus_cmd->count("--n")) corpus.n = corpus_n;
        std::optional<std::string> seed_override;
        if (const char* env = std::getenv("SIMPLEX_SEED")) seed_override = env;
        result = sk::cli::run_corpus(corpus, seed_override);
    }
    std::cout << result.out << std::flush;
    std::cerr << result.err;
    return result.exit_code;
}
