#pragma once

#include "mtsp/instance.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mtsp {

using Tour = std::vector<int>;

// Length of the depot-closed tour 0 -> tour[0] -> ... -> tour.back() -> 0.
// The summation order (first leg, interior legs left to right, closing leg)
// is shared by every evaluator so results compare exactly.
double tour_length(Instance const &instance, std::span<int const> tour);

// m depot-anchored tours. The depot is implicit at both ends of every tour.
struct MtspSolution {
    std::vector<Tour> tours;
    std::vector<double> lengths;
    double makespan = 0.0;

    std::size_t longest() const;
    double total_length() const;
    std::vector<int> giant_tour() const;

    friend bool operator==(MtspSolution const &, MtspSolution const &) = default;
};

MtspSolution make_solution(Instance const &instance, std::vector<Tour> tours);

// Recomputes lengths and makespan from coordinates.
void refresh(MtspSolution &solution, Instance const &instance);

// Empty when the solution has m non-empty tours partitioning 1..n whose stored
// lengths match recomputation within 1e-9 relative; otherwise a description.
std::optional<std::string> check_solution(MtspSolution const &solution, Instance const &instance);

// True when the tours contain every city 1..n exactly once (empty tours allowed).
bool covers_cities_once(std::vector<Tour> const &tours, int num_cities);

}  // namespace mtsp
