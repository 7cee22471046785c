#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace mtsp {

enum class CrossoverKind { Stx, Ox };

std::string to_string(CrossoverKind kind);
CrossoverKind crossover_from_string(std::string const &text);

// Tunable parameters of the hybrid GA. Defaults are the published settings.
struct GaConfig {
    int mu = 10;
    int lambda = 20;
    int k_tournament = 2;
    long it_div = 1000;
    long it_ni = 2500;
    double n_best_frac = 0.2;   // of mu
    double n_elite_frac = 0.2;  // of the current population size
    double n_close_frac = 0.1;  // of n
    double p_remove = 0.1;
    long n_imprv = 100;
    int n_local_1 = 100;
    int n_local_2 = 1000;

    std::optional<double> cutoff_seconds;  // none: stop on it_ni only
    std::optional<long> max_generations;   // test/benchmark knob
    std::uint64_t seed = 1;

    CrossoverKind crossover = CrossoverKind::Stx;
    bool enrich = true;  // second education layer

    int n_best() const;
    int n_close(int num_cities) const;

    // Throws std::invalid_argument describing the first violated constraint.
    void validate() const;

    // Sets one parameter by name from text, e.g. ("mu", "12"). Throws
    // std::invalid_argument on unknown keys or malformed values.
    void set(std::string const &key, std::string const &value);
};

}  // namespace mtsp
