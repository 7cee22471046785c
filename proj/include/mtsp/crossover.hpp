#pragma once

#include "mtsp/instance.hpp"
#include "mtsp/random.hpp"
#include "mtsp/solution.hpp"

#include <span>
#include <utility>
#include <vector>

namespace mtsp {

// Instrumentation filled in by stx when requested.
struct StxTrace {
    std::vector<std::pair<int, int>> matches;  // (parent-1 tour, parent-2 tour) per child tour
    int duplicates_removed = 0;
    int missing_inserted = 0;
    int retries = 0;
    bool fell_back = false;  // child copied from parent 1 after repeated repair failure
};

// Similar Tour Crossover. Each parent-1 tour, taken in random order, is
// paired with the unused parent-2 tour sharing the most cities; the pair is
// recombined with a two-point crossover (middle from the tour with fewer
// cities, outer parts from the other). Duplicates are then dropped, keeping
// the first occurrence, and missing cities are inserted greedily at the
// cheapest position outside the current longest tour.
MtspSolution stx(MtspSolution const &p1, MtspSolution const &p2, Instance const &instance, Rng &rng,
                 StxTrace *trace = nullptr);

// Order crossover: the slice [begin, end) comes from p1, the remaining
// positions are filled left to right with p2's other cities in p2 order.
std::vector<int> ox_with_slice(std::span<int const> p1, std::span<int const> p2, std::size_t begin,
                               std::size_t end);

// Order crossover with a uniformly random non-empty slice.
std::vector<int> ox(std::span<int const> p1, std::span<int const> p2, Rng &rng);

}  // namespace mtsp
