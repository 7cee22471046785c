#include "mtsp/population.hpp"

#include "mtsp/split.hpp"
#include "mtsp/tour_ops.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace mtsp {

Individual evaluate(std::vector<int> chromosome, Instance const &instance)
{
    auto solution = split_solution(chromosome, instance);
    return {std::move(chromosome), std::move(solution)};
}

double hamming(std::span<int const> a, std::span<int const> b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("hamming distance needs equal-length chromosomes");
    if (a.empty())
        return 0.0;
    std::size_t diff = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        diff += a[i] != b[i];
    return static_cast<double>(diff) / static_cast<double>(a.size());
}

double diversity_contribution(std::size_t index, Population const &population)
{
    double first = std::numeric_limits<double>::infinity();
    double second = first;
    for (std::size_t other = 0; other < population.size(); ++other) {
        if (other == index)
            continue;
        double const d = hamming(population[index].chromosome, population[other].chromosome);
        if (d < first) {
            second = first;
            first = d;
        } else if (d < second) {
            second = d;
        }
    }
    if (population.size() <= 1)
        return 1.0;
    if (population.size() == 2)
        return first;
    return 0.5 * (first + second);
}

double biased_fitness(double minmax, double delta, double n_elite, double n_population)
{
    return minmax * std::pow(1.0 - n_elite / n_population, delta);
}

std::vector<double> biased_fitnesses(Population const &population, double n_elite_frac)
{
    auto const size = static_cast<double>(population.size());
    std::vector<double> fitness(population.size());
    for (std::size_t i = 0; i < population.size(); ++i)
        fitness[i] = biased_fitness(population[i].minmax(), diversity_contribution(i, population),
                                    n_elite_frac * size, size);
    return fitness;
}

namespace {

// Depot-rooted cycle stored as a successor array.
class Cycle {
public:
    Cycle(int num_nodes, int start) : succ_(num_nodes, -1)
    {
        succ_[0] = start;
        succ_[start] = 0;
        members_ = {0, start};
    }

    int succ(int node) const { return succ_[node]; }
    bool contains(int node) const { return succ_[node] >= 0; }
    std::vector<int> const &members() const { return members_; }

    void insert_after(int node, int city)
    {
        succ_[city] = succ_[node];
        succ_[node] = city;
        members_.push_back(city);
    }

    std::vector<int> chromosome() const
    {
        std::vector<int> seq;
        seq.reserve(members_.size() - 1);
        for (int v = succ_[0]; v != 0; v = succ_[v])
            seq.push_back(v);
        return seq;
    }

private:
    std::vector<int> succ_;
    std::vector<int> members_;
};

double insertion_cost(Instance const &instance, int from, int to, int city)
{
    return instance.dist(from, city) + instance.dist(city, to) - instance.dist(from, to);
}

// Cheapest position for `city` in the cycle, as the node to insert after.
int best_position(Instance const &instance, Cycle const &cycle, int city)
{
    int best = 0;
    double best_cost = std::numeric_limits<double>::infinity();
    for (int node : cycle.members()) {
        double const cost = insertion_cost(instance, node, cycle.succ(node), city);
        if (cost < best_cost) {
            best_cost = cost;
            best = node;
        }
    }
    return best;
}

// Nearest / farthest insertion: select by distance to the partial tour, then
// insert at the cheapest position.
std::vector<int> distance_driven_insertion(Instance const &instance, Rng &rng, bool farthest)
{
    int const n = instance.num_cities();
    int const start = 1 + static_cast<int>(rng.index(n));
    Cycle cycle(instance.num_nodes(), start);

    std::vector<double> to_tour(instance.num_nodes());
    for (int c = 1; c <= n; ++c)
        to_tour[c] = std::min(instance.dist(c, 0), instance.dist(c, start));

    for (int step = 1; step < n; ++step) {
        int chosen = -1;
        for (int c = 1; c <= n; ++c) {
            if (cycle.contains(c))
                continue;
            if (chosen < 0 || (farthest ? to_tour[c] > to_tour[chosen] : to_tour[c] < to_tour[chosen]))
                chosen = c;
        }
        cycle.insert_after(best_position(instance, cycle, chosen), chosen);
        for (int c = 1; c <= n; ++c)
            if (!cycle.contains(c))
                to_tour[c] = std::min(to_tour[c], instance.dist(c, chosen));
    }
    return cycle.chromosome();
}

}  // namespace

std::vector<int> nearest_insertion(Instance const &instance, Rng &rng)
{
    return distance_driven_insertion(instance, rng, false);
}

std::vector<int> farthest_insertion(Instance const &instance, Rng &rng)
{
    return distance_driven_insertion(instance, rng, true);
}

std::vector<int> cheapest_insertion(Instance const &instance, Rng &rng)
{
    int const n = instance.num_cities();
    int const start = 1 + static_cast<int>(rng.index(n));
    Cycle cycle(instance.num_nodes(), start);

    // Per outside city: cheapest insertion cost and the node it goes after.
    std::vector<double> cost(instance.num_nodes(), 0.0);
    std::vector<int> after(instance.num_nodes(), -1);
    for (int c = 1; c <= n; ++c) {
        if (cycle.contains(c))
            continue;
        after[c] = best_position(instance, cycle, c);
        cost[c] = insertion_cost(instance, after[c], cycle.succ(after[c]), c);
    }

    for (int step = 1; step < n; ++step) {
        int chosen = -1;
        for (int c = 1; c <= n; ++c)
            if (!cycle.contains(c) && (chosen < 0 || cost[c] < cost[chosen]))
                chosen = c;

        int const from = after[chosen];
        cycle.insert_after(from, chosen);

        // Edge from -> old successor was replaced by from -> chosen -> old successor.
        int const to = cycle.succ(chosen);
        for (int c = 1; c <= n; ++c) {
            if (cycle.contains(c))
                continue;
            if (after[c] == from) {
                after[c] = best_position(instance, cycle, c);
                cost[c] = insertion_cost(instance, after[c], cycle.succ(after[c]), c);
                continue;
            }
            double const via_from = insertion_cost(instance, from, chosen, c);
            if (via_from < cost[c]) {
                cost[c] = via_from;
                after[c] = from;
            }
            double const via_chosen = insertion_cost(instance, chosen, to, c);
            if (via_chosen < cost[c]) {
                cost[c] = via_chosen;
                after[c] = chosen;
            }
        }
    }
    return cycle.chromosome();
}

namespace {

std::vector<int> best_insertion_tour(Instance const &instance, std::vector<std::vector<int>> const &tours)
{
    auto const &best = *std::min_element(tours.begin(), tours.end(), [&](auto const &a, auto const &b) {
        return tour_length(instance, a) < tour_length(instance, b);
    });
    auto improved = best;
    two_opt(improved, instance);
    return improved;
}

}  // namespace

std::vector<int> improved_tsp_tour(Instance const &instance, Rng &rng)
{
    std::vector<std::vector<int>> const tours{nearest_insertion(instance, rng),
                                              farthest_insertion(instance, rng),
                                              cheapest_insertion(instance, rng)};
    return best_insertion_tour(instance, tours);
}

std::vector<int> reverse_segment(std::span<int const> chromosome, std::size_t first, std::size_t last)
{
    std::vector<int> out(chromosome.begin(), chromosome.end());
    if (first > last || last >= out.size())
        throw std::out_of_range("reverse_segment positions out of range");
    std::reverse(out.begin() + first, out.begin() + last + 1);
    return out;
}

std::vector<int> perturb(std::span<int const> chromosome, int blocks, Rng &rng)
{
    auto const kind = static_cast<Perturbation>(rng.index(3));
    return perturb(chromosome, blocks, kind, rng);
}

std::vector<int> perturb(std::span<int const> chromosome, int blocks, Perturbation kind, Rng &rng)
{
    std::vector<int> out(chromosome.begin(), chromosome.end());
    std::size_t const n = out.size();
    if (n < 2)
        return out;

    switch (kind) {
    case Perturbation::ReverseSegment: {
        std::size_t i = rng.index(n);
        std::size_t j = rng.index(n - 1);
        if (j >= i)
            ++j;
        if (i > j)
            std::swap(i, j);
        std::reverse(out.begin() + i, out.begin() + j + 1);
        break;
    }
    case Perturbation::ShuffleBlocks: {
        std::size_t const count = std::clamp<std::size_t>(blocks, 1, n);
        if (count < 2)
            break;
        // count - 1 distinct cut points among 1..n-1.
        std::vector<std::size_t> cuts(n - 1);
        std::iota(cuts.begin(), cuts.end(), 1);
        for (std::size_t i = 0; i < count - 1; ++i)
            std::swap(cuts[i], cuts[i + rng.index(cuts.size() - i)]);
        cuts.resize(count - 1);
        std::sort(cuts.begin(), cuts.end());
        cuts.insert(cuts.begin(), 0);
        cuts.push_back(n);

        std::vector<std::size_t> order(count);
        std::iota(order.begin(), order.end(), 0);
        rng.shuffle(std::span(order));

        std::vector<int> shuffled;
        shuffled.reserve(n);
        for (auto b : order)
            shuffled.insert(shuffled.end(), chromosome.begin() + cuts[b], chromosome.begin() + cuts[b + 1]);
        out = std::move(shuffled);
        break;
    }
    case Perturbation::ShufflePositions: {
        std::size_t const hi = std::max<std::size_t>(2, n / 2);
        std::size_t const r = 2 + rng.index(hi - 1);
        std::vector<std::size_t> positions(n);
        std::iota(positions.begin(), positions.end(), 0);
        for (std::size_t i = 0; i < r; ++i)
            std::swap(positions[i], positions[i + rng.index(n - i)]);
        positions.resize(r);

        std::vector<int> values(r);
        for (std::size_t i = 0; i < r; ++i)
            values[i] = out[positions[i]];
        rng.shuffle(std::span(values));
        for (std::size_t i = 0; i < r; ++i)
            out[positions[i]] = values[i];
        break;
    }
    }
    return out;
}

BaseTours build_base_tours(Instance const &instance, Rng &rng,
                           std::optional<std::vector<int>> const &imported)
{
    BaseTours base;
    base.tours.push_back(nearest_insertion(instance, rng));
    base.tours.push_back(farthest_insertion(instance, rng));
    base.tours.push_back(cheapest_insertion(instance, rng));
    base.tours.push_back(best_insertion_tour(instance, base.tours));
    if (imported)
        base.tours.push_back(*imported);
    return base;
}

Population fresh_individuals(Instance const &instance, BaseTours const &base, int count, Rng &rng)
{
    Population out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) {
        auto const &source = base.tours[rng.index(base.tours.size())];
        out.push_back(evaluate(perturb(source, instance.num_salesmen(), rng), instance));
    }
    return out;
}

Population init_population(Instance const &instance, BaseTours const &base, int size, Rng &rng)
{
    Population population;
    population.reserve(size);
    for (std::size_t i = 0; i < base.tours.size() && static_cast<int>(population.size()) < size; ++i)
        population.push_back(evaluate(base.tours[i], instance));
    auto rest = fresh_individuals(instance, base, size - static_cast<int>(population.size()), rng);
    for (auto &individual : rest)
        population.push_back(std::move(individual));
    return population;
}

std::vector<int> read_tour_file(std::istream &in, int num_cities)
{
    std::vector<int> tour;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto const begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos || line[begin] == '#')
            continue;
        std::size_t used = 0;
        int city = 0;
        try {
            city = std::stoi(line.substr(begin), &used);
        } catch (std::exception const &) {
            throw std::invalid_argument("tour file line " + std::to_string(line_no)
                                        + ": expected a city index");
        }
        if (line.find_first_not_of(" \t\r", begin + used) != std::string::npos)
            throw std::invalid_argument("tour file line " + std::to_string(line_no)
                                        + ": trailing characters");
        tour.push_back(city);
    }
    if (!covers_cities_once({tour}, num_cities))
        throw std::invalid_argument("tour file is not a permutation of cities 1.."
                                    + std::to_string(num_cities));
    return tour;
}

}  // namespace mtsp
