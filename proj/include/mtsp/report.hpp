#pragma once

#include <optional>
#include <span>
#include <string>

namespace mtsp {

// Two fractional digits, rounding half away from zero on the shortest
// decimal representation of `value`. 2.005 is stored in binary as
// 2.00499999..., but its shortest representation is "2.005", so it
// rounds to "2.01".
std::string report_round(double value);

struct Summary {
    int runs = 0;
    double best = 0.0;
    double avg = 0.0;
    double std = 0.0;  // sample standard deviation, 0 for a single run
    double avg_time_to_best = 0.0;
};

Summary summarize(std::span<double const> makespans, std::span<double const> times_to_best);

// Cutoff policy: fixed seconds, a multiple of the node count (depot
// included), or none.
struct CutoffSpec {
    enum class Kind { None, PerNode, Seconds } kind = Kind::None;
    double value = 0.0;
    std::string text = "none";

    std::optional<double> resolve(int num_nodes) const;
};

// Accepts "none", "n/5", "2.4n", "n*2.4", or plain seconds such as "10".
CutoffSpec parse_cutoff(std::string const &text);

}  // namespace mtsp
