#include "mtsp/commands.hpp"

#include "mtsp/ga.hpp"
#include "mtsp/population.hpp"
#include "mtsp/report.hpp"
#include "mtsp/svg.hpp"

#include <atomic>
#include <chrono>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

namespace mtsp {

namespace fs = std::filesystem;

namespace {

std::string read_file(std::string const &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open instance file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string sanitize(std::string const &name)
{
    std::string out;
    for (char c : name)
        out += (std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' || c == '.') ? c : '_';
    return out.empty() ? "instance" : out;
}

std::string trim(std::string const &s)
{
    auto const begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos)
        return {};
    auto const end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

std::vector<int> parse_int_list(std::string const &text)
{
    std::vector<int> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        std::size_t used = 0;
        int const v = std::stoi(item, &used);
        if (used != item.size())
            throw std::invalid_argument("malformed integer '" + item + "'");
        values.push_back(v);
    }
    return values;
}

void write_text(fs::path const &path, std::string const &text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write '" + path.string() + "'");
    out << text;
    if (!out)
        throw std::runtime_error("failed writing '" + path.string() + "'");
}

// Runs fn(0..count-1) on up to `jobs` threads; rethrows the first failure.
void parallel_for(int count, int jobs, std::function<void(int)> const &fn)
{
    int const workers = std::max(1, std::min(jobs, count));
    if (workers == 1) {
        for (int i = 0; i < count; ++i)
            fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w)
        threads.emplace_back([&] {
            for (int i = next++; i < count; i = next++) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure)
                        failure = std::current_exception();
                }
            }
        });
    for (auto &t : threads)
        t.join();
    if (failure)
        std::rethrow_exception(failure);
}

struct CellOutcome {
    std::string label;
    int nodes = 0;
    int salesmen = 0;
    std::vector<double> makespans;
    std::vector<double> times_to_best;
    std::vector<RunResult> results;
    Summary summary;

    RunResult const &best() const
    {
        std::size_t best = 0;
        for (std::size_t i = 1; i < results.size(); ++i)
            if (results[i].best.minmax() < results[best].best.minmax())
                best = i;
        return results[best];
    }
};

CellOutcome run_cell(LoadedInstance const &loaded, GaConfig const &base, CutoffSpec const &cutoff, int runs,
                     std::uint64_t seed, fs::path const &runs_dir, std::string const &tag, int jobs,
                     std::optional<std::vector<int>> const &imported, bool quiet, std::ostream &err)
{
    Instance const &instance = loaded.instance;
    CellOutcome cell;
    cell.label = tag;
    cell.nodes = instance.num_nodes();
    cell.salesmen = instance.num_salesmen();
    cell.results.resize(runs);

    std::vector<GaConfig> configs(runs, base);
    std::mutex log_mutex;
    parallel_for(runs, jobs, [&](int k) {
        GaConfig &config = configs[k];
        config.seed = seed + static_cast<std::uint64_t>(k);
        config.cutoff_seconds = cutoff.resolve(instance.num_nodes());
        RunOptions options;
        options.imported_tour = imported;
        cell.results[k] = run(instance, config, options);
        if (!quiet) {
            std::lock_guard lock(log_mutex);
            err << "[" << tag << "] run " << (k + 1) << "/" << runs << " makespan "
                << report_round(cell.results[k].best.minmax()) << " generations "
                << cell.results[k].generations << " (" << to_string(cell.results[k].termination) << ")\n";
        }
    });

    for (int k = 0; k < runs; ++k) {
        auto const &result = cell.results[k];
        if (auto problem = check_solution(result.best.solution, instance))
            throw std::logic_error("run " + std::to_string(k) + " produced an invalid solution: " + *problem);

        auto const stem = tag + "_run" + std::to_string(k);
        write_text(runs_dir / (stem + ".json"),
                   run_record(instance, loaded.info, configs[k], cutoff, k, result).dump(2) + "\n");
        write_text(runs_dir / (stem + ".timing.json"), timing_record(result, loaded.load_seconds).dump(2) + "\n");
        cell.makespans.push_back(result.best.minmax());
        cell.times_to_best.push_back(result.time_to_best);
    }
    cell.summary = summarize(cell.makespans, cell.times_to_best);
    return cell;
}

std::string csv_row(std::string const &name, CellOutcome const &cell)
{
    auto const &s = cell.summary;
    return name + "," + std::to_string(cell.nodes) + "," + std::to_string(cell.salesmen) + ","
           + std::to_string(s.runs) + "," + report_round(s.best) + "," + report_round(s.avg) + ","
           + report_round(s.std) + "," + report_round(s.avg_time_to_best);
}

// Applies key=value overrides; throws std::invalid_argument.
void apply_params(GaConfig &config, std::vector<std::string> const &params)
{
    for (auto const &param : params) {
        auto const eq = param.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("parameter override '" + param + "' is not key=value");
        config.set(trim(param.substr(0, eq)), trim(param.substr(eq + 1)));
    }
}

std::string spec_name(InstanceSpec const &spec, Instance const &instance)
{
    return sanitize(spec.name.empty() ? instance.name() : spec.name);
}

}  // namespace

LoadedInstance load_instance(InstanceSpec const &spec, int salesmen)
{
    auto const start = std::chrono::steady_clock::now();
    auto seconds = [&] {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    };

    if (spec.random) {
        auto const [nodes, seed] = *spec.random;
        if (nodes < 2)
            throw std::invalid_argument("random instance needs at least 2 nodes");
        Instance generated = random_instance(nodes - 1, salesmen, seed);
        if (spec.metric && *spec.metric != generated.metric())
            generated = Instance(generated.name(), {generated.coords().begin(), generated.coords().end()},
                                 salesmen, *spec.metric);
        std::ostringstream text;
        write_tsplib(generated, text);
        InstanceInfo info{"random:" + std::to_string(nodes) + "," + std::to_string(seed), sha256_hex(text.str())};
        return {std::move(generated), std::move(info), seconds()};
    }

    std::string const bytes = read_file(spec.path);
    std::istringstream in(bytes);
    TsplibOptions options;
    options.metric = spec.metric;
    options.depot_node = spec.depot;
    Instance instance = [&] {
        try {
            return parse_tsplib(in, salesmen, options);
        } catch (ParseError const &e) {
            throw ParseError(spec.path + ": " + e.what());
        }
    }();
    return {std::move(instance), InstanceInfo{spec.path, sha256_hex(bytes)}, seconds()};
}

std::vector<InstanceSpec> parse_manifest(std::istream &in, std::string const &base_dir)
{
    std::vector<InstanceSpec> specs;
    std::string raw;
    int line_no = 0;
    auto fail = [&](std::string const &what) {
        throw std::invalid_argument("manifest line " + std::to_string(line_no) + ": " + what);
    };

    while (std::getline(in, raw)) {
        ++line_no;
        std::string const line = trim(raw.substr(0, raw.find('#')));
        if (line.empty())
            continue;
        auto const eq = line.find('=');
        if (eq == std::string::npos)
            fail("expected key = value");
        std::string const key = trim(line.substr(0, eq));
        std::string const value = trim(line.substr(eq + 1));

        try {
            if (key == "instance") {
                InstanceSpec spec;
                fs::path path(value);
                spec.path = path.is_absolute() ? path.string() : (fs::path(base_dir) / path).string();
                spec.name = path.stem().string();
                specs.push_back(std::move(spec));
                continue;
            }
            if (key == "random") {
                auto const parts = parse_int_list(value);
                if (parts.size() != 2)
                    fail("random expects <nodes>,<seed>");
                InstanceSpec spec;
                spec.random = std::pair{parts[0], static_cast<std::uint64_t>(parts[1])};
                specs.push_back(std::move(spec));
                continue;
            }
            if (specs.empty())
                fail("'" + key + "' before any instance or random entry");
            auto &spec = specs.back();
            if (key == "m")
                spec.salesmen = parse_int_list(value);
            else if (key == "cutoff")
                spec.cutoff = (parse_cutoff(value), value);
            else if (key == "metric")
                spec.metric = metric_from_string(value);
            else if (key == "depot")
                spec.depot = std::stoi(value);
            else if (key == "name")
                spec.name = value;
            else
                fail("unknown key '" + key + "'");
        } catch (std::invalid_argument const &e) {
            std::string const what = e.what();
            if (what.starts_with("manifest line"))
                throw;
            fail(what);
        }
    }
    for (auto const &spec : specs)
        if (spec.salesmen.empty())
            throw std::invalid_argument("manifest entry '" + (spec.name.empty() ? spec.path : spec.name)
                                        + "' has no m list");
    return specs;
}

std::vector<InstanceSpec> builtin_set(int set, std::string const &data_dir, int per_cell, std::uint64_t seed)
{
    std::vector<InstanceSpec> specs;
    auto file = [&](std::string const &stem, std::vector<int> salesmen, std::string const &cutoff) {
        InstanceSpec spec;
        spec.name = stem;
        spec.path = (fs::path(data_dir) / (stem + ".tsp")).string();
        spec.salesmen = std::move(salesmen);
        spec.cutoff = cutoff;
        spec.metric = Metric::EuclidReal;
        specs.push_back(std::move(spec));
    };

    switch (set) {
    case 1: {
        std::vector<std::pair<int, std::vector<int>>> const grid{
            {50, {5, 7, 10}}, {100, {5, 10, 15}}, {200, {10, 15, 20}}};
        for (auto const &[nodes, salesmen] : grid)
            for (int k = 0; k < per_cell; ++k) {
                InstanceSpec spec;
                spec.name = "set1_n" + std::to_string(nodes) + "_i" + std::to_string(k);
                spec.random = std::pair{nodes, seed + static_cast<std::uint64_t>(nodes) * 1000 + k};
                spec.salesmen = salesmen;
                spec.cutoff = "none";
                specs.push_back(std::move(spec));
            }
        break;
    }
    case 2:
        for (auto const *stem : {"eil51", "berlin52", "eil76", "rat99"})
            file(stem, {2, 3, 5, 7}, "none");
        break;
    case 3:
        file("mtsp51", {3, 5, 10}, "n/5");
        file("mtsp100", {3, 5, 10, 20}, "n/5");
        file("mtsp150", {3, 5, 10, 20, 30}, "n/5");
        break;
    case 4:
        for (auto const *stem : {"ch150", "kroA200", "lin318", "att532", "rat783", "cb1173"})
            file(stem, {3, 5, 10, 20}, "n/5");
        break;
    default: throw std::invalid_argument("unknown benchmark set " + std::to_string(set));
    }
    return specs;
}

int cmd_solve(SolveOptions const &options, std::ostream &out, std::ostream &err)
{
    GaConfig base;
    CutoffSpec cutoff;
    try {
        apply_params(base, options.params);
        base.crossover = options.crossover;
        if (!options.intersection_removal)
            base.p_remove = 0.0;
        base.validate();
        cutoff = parse_cutoff(options.cutoff);
        if (options.runs < 1)
            throw std::invalid_argument("--runs must be at least 1");
        if (options.salesmen < 1)
            throw std::invalid_argument("--salesmen must be at least 1");
        if (options.instances.empty() && options.randoms.empty())
            throw std::invalid_argument("give at least one --instance or --random");
        if (options.tour_file && options.instances.size() + options.randoms.size() != 1)
            throw std::invalid_argument("--tour-file needs exactly one instance");
    } catch (std::invalid_argument const &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    std::vector<InstanceSpec> specs;
    for (auto const &path : options.instances) {
        InstanceSpec spec;
        spec.path = path;
        spec.metric = options.metric;
        spec.depot = options.depot;
        specs.push_back(std::move(spec));
    }
    for (auto const &random : options.randoms) {
        InstanceSpec spec;
        spec.random = random;
        spec.metric = options.metric;
        specs.push_back(std::move(spec));
    }

    struct Variant {
        std::string tag;
        CrossoverKind crossover;
        bool removal;
    };
    std::vector<Variant> variants;
    if (options.ablation)
        variants = {{"ox_noremoval", CrossoverKind::Ox, false},
                    {"stx_noremoval", CrossoverKind::Stx, false},
                    {"ox_removal", CrossoverKind::Ox, true},
                    {"stx_removal", CrossoverKind::Stx, true}};
    else
        variants = {{"", options.crossover, options.intersection_removal}};

    try {
        fs::path const out_dir(options.out_dir);
        fs::path const runs_dir = out_dir / "runs";
        fs::create_directories(runs_dir);

        std::string summary = std::string(kSummaryHeader) + "\n";
        std::string ablation_csv = "instance,n,m,runs,ox_noremoval,stx_noremoval,ox_removal,stx_removal\n";
        std::string ablation_md = "| Instance | n | m | OX | STX | OX + removal | STX + removal |\n"
                                  "|---|---|---|---|---|---|---|\n";
        // Per instance: averages in variant order.
        std::vector<std::vector<double>> ablation_avgs;

        for (auto const &spec : specs) {
            LoadedInstance loaded = [&] {
                try {
                    return load_instance(spec, options.salesmen);
                } catch (std::exception const &e) {
                    throw std::runtime_error(e.what());
                }
            }();
            std::optional<std::vector<int>> imported;
            if (options.tour_file) {
                std::ifstream tour_in(*options.tour_file);
                if (!tour_in)
                    throw std::runtime_error("cannot open tour file '" + *options.tour_file + "'");
                imported = read_tour_file(tour_in, loaded.instance.num_cities());
            }

            std::string const name = spec_name(spec, loaded.instance);
            std::vector<double> avgs;
            for (auto const &variant : variants) {
                GaConfig config = base;
                config.crossover = variant.crossover;
                config.p_remove = variant.removal ? base.p_remove : 0.0;
                if (options.ablation && variant.removal && base.p_remove == 0.0)
                    config.p_remove = GaConfig{}.p_remove;

                std::string const tag = name + "_m" + std::to_string(options.salesmen)
                                        + (variant.tag.empty() ? "" : "_" + variant.tag);
                auto cell = run_cell(loaded, config, cutoff, options.runs, options.seed, runs_dir, tag,
                                     options.jobs, imported, options.quiet, err);
                std::string const row_name = variant.tag.empty() ? name : name + "/" + variant.tag;
                summary += csv_row(row_name, cell) + "\n";
                out << csv_row(row_name, cell) << "\n";
                avgs.push_back(cell.summary.avg);

                if (options.svg)
                    write_svg((out_dir / (tag + "_best.svg")).string(), cell.best().best.solution,
                              loaded.instance, SvgOptions{options.labels});
            }

            if (options.ablation) {
                std::string csv = name + "," + std::to_string(loaded.instance.num_nodes()) + ","
                                  + std::to_string(options.salesmen) + "," + std::to_string(options.runs);
                std::string md = "| " + name + " | " + std::to_string(loaded.instance.num_nodes()) + " | "
                                 + std::to_string(options.salesmen) + " |";
                for (double avg : avgs) {
                    csv += "," + report_round(avg);
                    md += " " + report_round(avg) + " |";
                }
                ablation_csv += csv + "\n";
                ablation_md += md + "\n";
                ablation_avgs.push_back(avgs);
            }
        }

        write_text(out_dir / "summary.csv", summary);

        if (options.ablation) {
            // Mean relative improvement of column `better` over column `worse`.
            auto improvement = [&](std::size_t better, std::size_t worse) {
                double sum = 0.0;
                for (auto const &avgs : ablation_avgs)
                    sum += avgs[worse] > 0 ? (avgs[worse] - avgs[better]) / avgs[worse] * 100.0 : 0.0;
                return sum / static_cast<double>(ablation_avgs.size());
            };
            std::ostringstream notes;
            notes << "\nAverage improvement of STX over OX without intersection removal: "
                  << report_round(improvement(1, 0)) << "%\n"
                  << "Average improvement of STX over OX with intersection removal: "
                  << report_round(improvement(3, 2)) << "%\n"
                  << "Average improvement from intersection removal with OX: "
                  << report_round(improvement(2, 0)) << "%\n"
                  << "Average improvement from intersection removal with STX: "
                  << report_round(improvement(3, 1)) << "%\n";
            ablation_md += notes.str();
            write_text(out_dir / "ablation.csv", ablation_csv);
            write_text(out_dir / "ablation.md", ablation_md);
            out << "\n" << ablation_md;
        }
    } catch (std::exception const &e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitOk;
}

int cmd_benchmark(BenchmarkOptions const &options, std::ostream &out, std::ostream &err)
{
    GaConfig base;
    std::vector<InstanceSpec> specs;
    std::optional<CutoffSpec> cutoff_override;
    try {
        apply_params(base, options.params);
        base.validate();
        if (options.runs < 1)
            throw std::invalid_argument("--runs must be at least 1");
        if (options.instances_per_cell < 1)
            throw std::invalid_argument("--instances-per-cell must be at least 1");
        if (options.cutoff)
            cutoff_override = parse_cutoff(*options.cutoff);

        if (options.set == "1" || options.set == "2" || options.set == "3" || options.set == "4") {
            specs = builtin_set(std::stoi(options.set), options.data_dir, options.instances_per_cell, options.seed);
        } else {
            std::ifstream manifest(options.set);
            if (!manifest)
                throw std::invalid_argument("--set must be 1, 2, 3, 4 or a manifest file; cannot open '"
                                            + options.set + "'");
            specs = parse_manifest(manifest, fs::path(options.set).parent_path().string());
        }
        if (!options.sizes.empty())
            std::erase_if(specs, [&](InstanceSpec const &spec) {
                return spec.random
                       && std::find(options.sizes.begin(), options.sizes.end(), spec.random->first)
                              == options.sizes.end();
            });
    } catch (std::invalid_argument const &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    std::vector<std::string> missing;
    try {
        fs::path const out_dir(options.out_dir);
        fs::path const runs_dir = out_dir / "runs";
        fs::create_directories(runs_dir);

        std::string csv = std::string(kSummaryHeader) + "\n";
        std::string table = "| Instance | n | m | Best | Avg | Time to best (s) |\n|---|---|---|---|---|---|\n";
        nlohmann::json cells = nlohmann::json::array();

        for (auto const &spec : specs) {
            if (!spec.random && !fs::exists(spec.path)) {
                missing.push_back(spec.path);
                continue;
            }
            for (int m : spec.salesmen) {
                LoadedInstance loaded = load_instance(spec, m);
                CutoffSpec const cutoff
                    = cutoff_override ? *cutoff_override : parse_cutoff(spec.cutoff.empty() ? "n/5" : spec.cutoff);
                std::string const name = spec_name(spec, loaded.instance);
                std::string const tag = name + "_m" + std::to_string(m);
                auto cell = run_cell(loaded, base, cutoff, options.runs, options.seed, runs_dir, tag, options.jobs,
                                     std::nullopt, options.quiet, err);

                csv += csv_row(name, cell) + "\n";
                table += "| " + name + " | " + std::to_string(cell.nodes) + " | " + std::to_string(m) + " | "
                         + report_round(cell.summary.best) + " | " + report_round(cell.summary.avg) + " | "
                         + report_round(cell.summary.avg_time_to_best) + " |\n";
                cells.push_back({
                    {"instance", name},
                    {"source", loaded.info.source},
                    {"sha256", loaded.info.sha256},
                    {"n", cell.nodes},
                    {"m", m},
                    {"cutoff", cutoff.text},
                    {"runs", cell.summary.runs},
                    {"best", cell.summary.best},
                    {"avg", cell.summary.avg},
                    {"std", cell.summary.std},
                    {"avg_time_to_best_s", cell.summary.avg_time_to_best},
                    {"makespans", cell.makespans},
                });
                if (options.svg)
                    write_svg((out_dir / (tag + "_best.svg")).string(), cell.best().best.solution, loaded.instance);
            }
        }

        write_text(out_dir / "benchmark.csv", csv);
        write_text(out_dir / "benchmark.md", table);
        nlohmann::json const report{
            {"schema", "mtsp-benchmark/1"}, {"set", options.set}, {"seed", options.seed},
            {"runs", options.runs}, {"cells", std::move(cells)}, {"missing", missing},
        };
        write_text(out_dir / "benchmark.json", report.dump(2) + "\n");
        out << table;
    } catch (std::exception const &e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    }

    if (!missing.empty()) {
        err << "missing instance files (skipped):\n";
        for (auto const &path : missing)
            err << "  " << path << "\n";
        return kExitFailure;
    }
    return kExitOk;
}

}  // namespace mtsp
