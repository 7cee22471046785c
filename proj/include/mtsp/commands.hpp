#pragma once

#include "mtsp/config.hpp"
#include "mtsp/instance.hpp"
#include "mtsp/run_record.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace mtsp {

// Exit codes shared by the commands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // infeasible instance, I/O error, missing files
inline constexpr int kExitUsage = 2;

// Where an instance comes from and how it is to be solved.
struct InstanceSpec {
    std::string name;  // display name; derived from the source when empty
    std::string path;  // TSPLIB file; empty for generated instances
    std::optional<std::pair<int, std::uint64_t>> random;  // total nodes (depot included), seed
    std::vector<int> salesmen;
    std::string cutoff;  // empty: the caller's default
    std::optional<Metric> metric;
    std::optional<int> depot;
};

struct LoadedInstance {
    Instance instance;
    InstanceInfo info;
    double load_seconds;
};

LoadedInstance load_instance(InstanceSpec const &spec, int salesmen);

// Manifest: `key = value` lines, `#` comments. `instance = <path>` or
// `random = <nodes>,<seed>` opens an entry; `m = 3,5,10`, `cutoff = n/5`,
// `metric = real|tsplib|att`, `depot = <label>` and `name = <text>` refine
// it. Relative paths resolve against `base_dir`.
std::vector<InstanceSpec> parse_manifest(std::istream &in, std::string const &base_dir);

// Built-in benchmark grids. Set 1 is generated (`per_cell` instances per
// size); sets 2-4 name TSPLIB files expected in `data_dir`.
std::vector<InstanceSpec> builtin_set(int set, std::string const &data_dir, int per_cell, std::uint64_t seed);

struct SolveOptions {
    std::vector<std::string> instances;                        // TSPLIB paths
    std::vector<std::pair<int, std::uint64_t>> randoms;       // (nodes, seed)
    int salesmen = 0;
    std::string cutoff = "n/5";
    int runs = 1;
    std::uint64_t seed = 1;
    std::string out_dir = "mtsp_out";
    CrossoverKind crossover = CrossoverKind::Stx;
    bool intersection_removal = true;
    std::optional<Metric> metric;
    std::optional<int> depot;
    std::vector<std::string> params;  // key=value GaConfig overrides
    std::optional<std::string> tour_file;
    bool ablation = false;  // run the {OX, STX} x {removal off, on} grid
    bool svg = false;
    bool labels = false;
    int jobs = 1;
    bool quiet = false;
};

int cmd_solve(SolveOptions const &options, std::ostream &out, std::ostream &err);

struct BenchmarkOptions {
    std::string set;  // "1".."4" or a manifest path
    std::string data_dir = ".";
    int instances_per_cell = 5;
    int runs = 10;
    std::uint64_t seed = 1;
    std::optional<std::string> cutoff;  // overrides the per-entry policy
    std::vector<int> sizes;            // Set 1 only: restrict node counts
    std::string out_dir = "mtsp_bench";
    std::vector<std::string> params;
    bool svg = false;
    int jobs = 1;
    bool quiet = false;
};

int cmd_benchmark(BenchmarkOptions const &options, std::ostream &out, std::ostream &err);

// CSV header of summary files.
inline constexpr char const *kSummaryHeader = "instance,n,m,runs,best,avg,std,avg_time_to_best_s";

}  // namespace mtsp
