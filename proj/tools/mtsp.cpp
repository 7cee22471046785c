// Command-line front end: `mtsp solve ...` and `mtsp benchmark ...`.

#include "mtsp/commands.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <map>

namespace {

std::pair<int, std::uint64_t> parse_random(std::string const &text)
{
    auto const comma = text.find(',');
    if (comma == std::string::npos)
        throw CLI::ValidationError("--random", "expected <nodes>,<seed>, got '" + text + "'");
    try {
        std::size_t used = 0;
        int const nodes = std::stoi(text.substr(0, comma), &used);
        if (used != comma)
            throw std::invalid_argument(text);
        std::string const seed_text = text.substr(comma + 1);
        std::uint64_t const seed = std::stoull(seed_text, &used);
        if (used != seed_text.size())
            throw std::invalid_argument(text);
        return {nodes, seed};
    } catch (std::logic_error const &) {
        throw CLI::ValidationError("--random", "expected <nodes>,<seed>, got '" + text + "'");
    }
}

}  // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Hybrid genetic algorithm for the min-max multiple TSP"};
    app.require_subcommand(1);

    std::map<std::string, mtsp::CrossoverKind> const crossovers{{"stx", mtsp::CrossoverKind::Stx},
                                                                {"ox", mtsp::CrossoverKind::Ox}};
    std::map<std::string, mtsp::Metric> const metrics{{"real", mtsp::Metric::EuclidReal},
                                                      {"tsplib", mtsp::Metric::EuclidRoundedTsplib},
                                                      {"att", mtsp::Metric::PseudoEuclidAtt}};

    mtsp::SolveOptions solve;
    std::vector<std::string> randoms;
    mtsp::Metric metric{};
    int depot = 0;
    std::string tour_file;

    auto *cmd_solve = app.add_subcommand("solve", "Solve instances with repeated seeded runs");
    cmd_solve->add_option("--instance", solve.instances, "TSPLIB instance file (repeatable)");
    cmd_solve->add_option("--random", randoms, "Generated instance <nodes>,<seed>; nodes include the depot");
    cmd_solve->add_option("--salesmen,-m", solve.salesmen, "Number of salesmen")->required();
    cmd_solve->add_option("--cutoff", solve.cutoff, "n/5, 2.4n, n*X, seconds or none")->capture_default_str();
    cmd_solve->add_option("--runs", solve.runs, "Runs per instance")->capture_default_str();
    cmd_solve->add_option("--seed", solve.seed, "Base seed; run k uses seed + k")->capture_default_str();
    cmd_solve->add_option("--out", solve.out_dir, "Output directory")->capture_default_str();
    cmd_solve->add_option("--crossover", solve.crossover, "stx or ox")
        ->transform(CLI::CheckedTransformer(crossovers, CLI::ignore_case));
    cmd_solve->add_flag("!--no-intersection-removal", solve.intersection_removal, "Disable intersection removal");
    auto *metric_opt = cmd_solve->add_option("--metric", metric, "real, tsplib or att")
                           ->transform(CLI::CheckedTransformer(metrics, CLI::ignore_case));
    auto *depot_opt = cmd_solve->add_option("--depot", depot, "1-based file node id of the depot");
    cmd_solve->add_option("--params", solve.params, "GA parameter overrides key=value");
    auto *tour_opt = cmd_solve->add_option("--tour-file", tour_file, "Extra base tour (one city label per line)");
    cmd_solve->add_flag("--ablation", solve.ablation, "Run the {OX, STX} x {removal off, on} grid");
    cmd_solve->add_flag("--svg", solve.svg, "Write an SVG of each cell's best solution");
    cmd_solve->add_flag("--labels", solve.labels, "Label cities in SVG output");
    cmd_solve->add_option("--jobs,-j", solve.jobs, "Parallel runs")->check(CLI::PositiveNumber);
    cmd_solve->add_flag("--quiet,-q", solve.quiet, "No per-run progress on stderr");

    mtsp::BenchmarkOptions bench;
    std::string bench_cutoff;
    auto *cmd_bench = app.add_subcommand("benchmark", "Run a benchmark grid");
    cmd_bench->add_option("--set", bench.set, "1, 2, 3, 4 or a manifest file")->required();
    cmd_bench->add_option("--data-dir", bench.data_dir, "Directory with TSPLIB files for sets 2-4")
        ->capture_default_str();
    cmd_bench->add_option("--instances-per-cell", bench.instances_per_cell, "Set 1 instances per size")
        ->capture_default_str();
    cmd_bench->add_option("--runs", bench.runs, "Runs per cell")->capture_default_str();
    cmd_bench->add_option("--seed", bench.seed, "Base seed")->capture_default_str();
    auto *bench_cutoff_opt = cmd_bench->add_option("--cutoff", bench_cutoff, "Override every cell's cutoff");
    cmd_bench->add_option("--sizes", bench.sizes, "Set 1 node counts to keep")->delimiter(',');
    cmd_bench->add_option("--out", bench.out_dir, "Output directory")->capture_default_str();
    cmd_bench->add_option("--params", bench.params, "GA parameter overrides key=value");
    cmd_bench->add_flag("--svg", bench.svg, "Write an SVG of each cell's best solution");
    cmd_bench->add_option("--jobs,-j", bench.jobs, "Parallel runs")->check(CLI::PositiveNumber);
    cmd_bench->add_flag("--quiet,-q", bench.quiet, "No per-run progress on stderr");

    try {
        app.parse(argc, argv);
        for (auto const &r : randoms)
            solve.randoms.push_back(parse_random(r));
    } catch (CLI::CallForHelp const &e) {
        return app.exit(e);
    } catch (CLI::CallForAllHelp const &e) {
        return app.exit(e);
    } catch (CLI::ParseError const &e) {
        app.exit(e);
        return mtsp::kExitUsage;
    }

    if (cmd_solve->parsed()) {
        if (*metric_opt)
            solve.metric = metric;
        if (*depot_opt)
            solve.depot = depot;
        if (*tour_opt)
            solve.tour_file = tour_file;
        return mtsp::cmd_solve(solve, std::cout, std::cerr);
    }
    if (*bench_cutoff_opt)
        bench.cutoff = bench_cutoff;
    return mtsp::cmd_benchmark(bench, std::cout, std::cerr);
}
