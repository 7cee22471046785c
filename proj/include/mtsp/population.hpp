#pragma once

#include "mtsp/instance.hpp"
#include "mtsp/random.hpp"
#include "mtsp/solution.hpp"

#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

namespace mtsp {

// A giant-tour chromosome together with its optimal split.
struct Individual {
    std::vector<int> chromosome;
    MtspSolution solution;

    double minmax() const { return solution.makespan; }
};

using Population = std::vector<Individual>;

// Evaluates a chromosome by split + extract.
Individual evaluate(std::vector<int> chromosome, Instance const &instance);

// Normalized Hamming distance between two equal-length chromosomes.
double hamming(std::span<int const> a, std::span<int const> b);

// Mean Hamming distance from member `index` to its two closest other members.
// With one other member that single distance is used; alone it is 1.
double diversity_contribution(std::size_t index, Population const &population);

// minmax * (1 - n_elite / n_population) ^ delta. Lower is better.
double biased_fitness(double minmax, double delta, double n_elite, double n_population);

// Biased fitness of every member, with n_elite = n_elite_frac * population size.
std::vector<double> biased_fitnesses(Population const &population, double n_elite_frac);

// Classic insertion heuristics on the depot-rooted cycle. The rng picks the
// first city; the rest of the construction is deterministic.
std::vector<int> nearest_insertion(Instance const &instance, Rng &rng);
std::vector<int> farthest_insertion(Instance const &instance, Rng &rng);
std::vector<int> cheapest_insertion(Instance const &instance, Rng &rng);

// Stand-in for an exact TSP tour: the best of the three insertion tours,
// improved to a 2-opt local optimum.
std::vector<int> improved_tsp_tour(Instance const &instance, Rng &rng);

enum class Perturbation { ReverseSegment, ShuffleBlocks, ShufflePositions };

// Reverses the cities at positions first..last (0-based, inclusive).
std::vector<int> reverse_segment(std::span<int const> chromosome, std::size_t first, std::size_t last);

// Applies one perturbation chosen uniformly from the three kinds.
std::vector<int> perturb(std::span<int const> chromosome, int blocks, Rng &rng);
std::vector<int> perturb(std::span<int const> chromosome, int blocks, Perturbation kind, Rng &rng);

// The TSP tours an initial population is derived from.
struct BaseTours {
    std::vector<std::vector<int>> tours;
};

// Nearest, farthest and cheapest insertion tours, the 2-opt improved tour,
// and `imported` when given.
BaseTours build_base_tours(Instance const &instance, Rng &rng,
                           std::optional<std::vector<int>> const &imported = std::nullopt);

// One individual per base tour (up to `size`), the remainder from perturbed
// copies of randomly chosen base tours.
Population init_population(Instance const &instance, BaseTours const &base, int size, Rng &rng);

// `count` fresh individuals from perturbed base tours.
Population fresh_individuals(Instance const &instance, BaseTours const &base, int count, Rng &rng);

// Tour file: one 1-based city index per line, depot excluded. Validates that
// the result is a permutation of 1..num_cities.
std::vector<int> read_tour_file(std::istream &in, int num_cities);

}  // namespace mtsp
