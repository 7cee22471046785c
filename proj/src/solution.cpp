#include "mtsp/solution.hpp"

#include <algorithm>
#include <cmath>

namespace mtsp {

double tour_length(Instance const &instance, std::span<int const> tour)
{
    if (tour.empty())
        return 0.0;
    double load = instance.dist(0, tour[0]);
    for (std::size_t i = 1; i < tour.size(); ++i)
        load += instance.dist(tour[i - 1], tour[i]);
    return load + instance.dist(tour.back(), 0);
}

std::size_t MtspSolution::longest() const
{
    return lengths.empty()
               ? 0
               : static_cast<std::size_t>(std::max_element(lengths.begin(), lengths.end())
                                          - lengths.begin());
}

double MtspSolution::total_length() const
{
    double sum = 0.0;
    for (double l : lengths)
        sum += l;
    return sum;
}

std::vector<int> MtspSolution::giant_tour() const
{
    std::vector<int> giant;
    for (auto const &tour : tours)
        giant.insert(giant.end(), tour.begin(), tour.end());
    return giant;
}

MtspSolution make_solution(Instance const &instance, std::vector<Tour> tours)
{
    MtspSolution solution;
    solution.tours = std::move(tours);
    refresh(solution, instance);
    return solution;
}

void refresh(MtspSolution &solution, Instance const &instance)
{
    solution.lengths.resize(solution.tours.size());
    solution.makespan = 0.0;
    for (std::size_t t = 0; t < solution.tours.size(); ++t) {
        solution.lengths[t] = tour_length(instance, solution.tours[t]);
        solution.makespan = std::max(solution.makespan, solution.lengths[t]);
    }
}

bool covers_cities_once(std::vector<Tour> const &tours, int num_cities)
{
    std::vector<char> seen(static_cast<std::size_t>(num_cities) + 1, 0);
    std::size_t count = 0;
    for (auto const &tour : tours)
        for (int city : tour) {
            if (city < 1 || city > num_cities || seen[city])
                return false;
            seen[city] = 1;
            ++count;
        }
    return count == static_cast<std::size_t>(num_cities);
}

std::optional<std::string> check_solution(MtspSolution const &solution, Instance const &instance)
{
    auto const m = static_cast<std::size_t>(instance.num_salesmen());
    if (solution.tours.size() != m)
        return "expected " + std::to_string(m) + " tours, found "
               + std::to_string(solution.tours.size());
    for (std::size_t t = 0; t < m; ++t)
        if (solution.tours[t].empty())
            return "tour " + std::to_string(t) + " is empty";
    if (!covers_cities_once(solution.tours, instance.num_cities()))
        return "tours do not partition the cities";
    if (solution.lengths.size() != m)
        return "length count does not match tour count";

    auto const close = [](double a, double b) {
        return std::abs(a - b) <= 1e-9 * std::max({1.0, std::abs(a), std::abs(b)});
    };
    double makespan = 0.0;
    for (std::size_t t = 0; t < m; ++t) {
        double const actual = tour_length(instance, solution.tours[t]);
        if (!close(actual, solution.lengths[t]))
            return "tour " + std::to_string(t) + " stored length " + std::to_string(solution.lengths[t])
                   + " differs from recomputed " + std::to_string(actual);
        makespan = std::max(makespan, actual);
    }
    if (!close(makespan, solution.makespan))
        return "stored makespan differs from the longest tour";
    return std::nullopt;
}

}  // namespace mtsp
