#pragma once

#include "mtsp/config.hpp"
#include "mtsp/education.hpp"
#include "mtsp/instance.hpp"
#include "mtsp/population.hpp"
#include "mtsp/random.hpp"

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mtsp {

struct HistoryEntry {
    long generation;
    double seconds;  // wall time since the solver started
    double makespan;
};

enum class Termination { NoImprovement, Cutoff, GenerationLimit };

std::string to_string(Termination termination);

struct RunResult {
    Individual best;
    std::vector<HistoryEntry> history;  // one entry per strict improvement of the best
    long generations = 0;
    Termination termination = Termination::NoImprovement;
    double seconds = 0.0;
    double time_to_best = 0.0;
};

struct RunOptions {
    std::optional<std::vector<int>> imported_tour;  // extra base tour
    // Called whenever the best individual improves (and once for the initial best).
    std::function<void(HistoryEntry const &, Individual const &)> on_improvement;
};

// Index of the tournament winner: k distinct members drawn uniformly, lowest
// fitness wins (first drawn on ties).
std::size_t tournament_select(std::span<double const> fitness, int k, Rng &rng);

// Keeps the `mu` members with the smallest minmax, stable on ties.
Population survivor_selection(Population population, int mu);

// Keeps the n_best lowest-minmax members and refills to mu from perturbed
// base tours.
Population diversify(Population population, Instance const &instance, GaConfig const &config,
                     BaseTours const &base, Rng &rng);

// The hybrid GA. Stops after it_ni generations without improvement, at the
// wall-clock cutoff (checked once per generation), or at max_generations.
RunResult run(Instance const &instance, GaConfig const &config, RunOptions const &options = {});

}  // namespace mtsp
