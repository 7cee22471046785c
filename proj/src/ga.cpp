#include "mtsp/ga.hpp"

#include "mtsp/crossover.hpp"
#include "mtsp/split.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

namespace mtsp {

std::string to_string(Termination termination)
{
    switch (termination) {
    case Termination::NoImprovement: return "no_improvement";
    case Termination::Cutoff: return "cutoff";
    case Termination::GenerationLimit: return "generation_limit";
    }
    return "no_improvement";
}

std::size_t tournament_select(std::span<double const> fitness, int k, Rng &rng)
{
    std::size_t const size = fitness.size();
    std::size_t const draws = std::clamp<std::size_t>(static_cast<std::size_t>(std::max(k, 1)), 1, size);

    // Partial Fisher-Yates over member indices: k distinct members.
    std::vector<std::size_t> members(size);
    std::iota(members.begin(), members.end(), 0);
    std::size_t best = size;
    for (std::size_t i = 0; i < draws; ++i) {
        std::swap(members[i], members[i + rng.index(size - i)]);
        std::size_t const candidate = members[i];
        if (best == size || fitness[candidate] < fitness[best])
            best = candidate;
    }
    return best;
}

Population survivor_selection(Population population, int mu)
{
    std::stable_sort(population.begin(), population.end(),
                     [](Individual const &a, Individual const &b) { return a.minmax() < b.minmax(); });
    if (population.size() > static_cast<std::size_t>(mu))
        population.resize(mu);
    return population;
}

Population diversify(Population population, Instance const &instance, GaConfig const &config,
                     BaseTours const &base, Rng &rng)
{
    population = survivor_selection(std::move(population), config.n_best());
    int const missing = config.mu - static_cast<int>(population.size());
    if (missing > 0) {
        auto fresh = fresh_individuals(instance, base, missing, rng);
        for (auto &individual : fresh)
            population.push_back(std::move(individual));
    }
    return population;
}

RunResult run(Instance const &instance, GaConfig const &config, RunOptions const &options)
{
    config.validate();
    if (instance.num_cities() < instance.num_salesmen())
        throw InfeasibleError("instance has fewer cities than salesmen");

    using Clock = std::chrono::steady_clock;
    auto const start = Clock::now();
    auto const elapsed = [&] { return std::chrono::duration<double>(Clock::now() - start).count(); };

    Rng rng(config.seed);
    NeighborLists const neighbors(instance, config.n_close(instance.num_cities()));
    BaseTours const base = build_base_tours(instance, rng, options.imported_tour);
    Population population = init_population(instance, base, config.mu, rng);
    MoveWeights weights;

    RunResult result;
    result.best = *std::min_element(population.begin(), population.end(),
                                    [](Individual const &a, Individual const &b) { return a.minmax() < b.minmax(); });

    auto record = [&](long generation) {
        HistoryEntry const entry{generation, elapsed(), result.best.minmax()};
        result.history.push_back(entry);
        result.time_to_best = entry.seconds;
        if (options.on_improvement)
            options.on_improvement(entry, result.best);
    };
    record(0);

    long stagnation = 0;
    long since_diversification = 0;
    long generation = 0;

    while (true) {
        if (stagnation >= config.it_ni) {
            result.termination = Termination::NoImprovement;
            break;
        }
        if (config.max_generations && generation >= *config.max_generations) {
            result.termination = Termination::GenerationLimit;
            break;
        }
        if (config.cutoff_seconds && elapsed() >= *config.cutoff_seconds) {
            result.termination = Termination::Cutoff;
            break;
        }

        auto const fitness = biased_fitnesses(population, config.n_elite_frac);
        auto const &first = population[tournament_select(fitness, config.k_tournament, rng)];
        auto const &second = population[tournament_select(fitness, config.k_tournament, rng)];

        MtspSolution child;
        if (config.crossover == CrossoverKind::Stx) {
            auto const offspring = stx(first.solution, second.solution, instance, rng);
            child = split_solution(offspring.giant_tour(), instance);
        } else {
            child = split_solution(ox(first.chromosome, second.chromosome, rng), instance);
        }

        Individual educated = educate(std::move(child), instance, neighbors, config, weights, stagnation, rng);
        bool const improved = educated.minmax() < result.best.minmax();
        if (improved)
            result.best = educated;
        population.push_back(std::move(educated));

        if (population.size() >= static_cast<std::size_t>(config.mu + config.lambda))
            population = survivor_selection(std::move(population), config.mu);

        ++generation;
        if (improved) {
            stagnation = 0;
            since_diversification = 0;
            record(generation);
        } else {
            ++stagnation;
            ++since_diversification;
        }

        if (since_diversification >= config.it_div) {
            population = diversify(std::move(population), instance, config, base, rng);
            weights = MoveWeights{};
            since_diversification = 0;
        }
    }

    result.generations = generation;
    result.seconds = elapsed();
    return result;
}

}  // namespace mtsp
