#pragma once

#include "mtsp/instance.hpp"
#include "mtsp/solution.hpp"

namespace mtsp {

// Minimum gain for a local-search move to count as an improvement. Guards
// against cycling on floating-point noise.
inline constexpr double kMoveEpsilon = 1e-9;

// Exhaustive first-improvement 2-opt on the depot-closed tour, repeated until
// a full sweep finds no improving reversal. Returns the number of moves made.
int two_opt(Tour &tour, Instance const &instance);

}  // namespace mtsp
