#pragma once

#include "mtsp/config.hpp"
#include "mtsp/instance.hpp"
#include "mtsp/population.hpp"
#include "mtsp/random.hpp"
#include "mtsp/solution.hpp"

#include <array>
#include <cstddef>

namespace mtsp {

// True iff the open segments p1-p2 and q1-q2 meet in a single interior
// point. Shared endpoints, touching and collinear overlaps are not crossings.
bool segments_properly_cross(Point p1, Point p2, Point q1, Point q2);

struct IntersectionStats {
    int swaps = 0;
    int empty_repairs = 0;
    bool guard_tripped = false;
};

// Repeatedly finds a proper crossing between edges of two different tours
// (depot legs included) and swaps the tails behind the crossing edges, until
// no crossing remains or 10 n swaps have been made.
MtspSolution remove_intersections(MtspSolution solution, Instance const &instance,
                                  IntersectionStats *stats = nullptr);

struct EnrichStats {
    int shifts = 0;
    int swaps = 0;
    int two_opt_moves = 0;
};

// Inter-tour 1-shift / 1-swap to a fixpoint, then 2-opt on every tour;
// repeated until 2-opt no longer changes anything. Candidate moves pair a city
// with its nearest neighbours lying in other tours.
MtspSolution enrich(MtspSolution solution, Instance const &instance, NeighborLists const &neighbors,
                    EnrichStats *stats = nullptr);

enum class IntraMove { Reinsert = 0, Exchange = 1, OrOpt2 = 2, OrOpt3 = 3 };

inline constexpr std::size_t kIntraMoveCount = 4;

// Roulette-wheel weights of the intra-tour moves. Each weight starts at 1 and
// grows by one per successful application.
struct MoveWeights {
    std::array<double, kIntraMoveCount> weights{1.0, 1.0, 1.0, 1.0};

    IntraMove pick(Rng &rng) const;
    double &operator[](IntraMove move) { return weights[static_cast<std::size_t>(move)]; }
    double operator[](IntraMove move) const { return weights[static_cast<std::size_t>(move)]; }

    friend bool operator==(MoveWeights const &, MoveWeights const &) = default;
};

// `repeats` randomized intra-tour moves. Each one picks a move by roulette,
// the longest tour with probability 1/2 (otherwise a random tour), and a
// random city or block in it; the best candidate next to one of the city's
// neighbours in that tour is applied iff it strictly shortens the tour.
MtspSolution improve(MtspSolution solution, Instance const &instance, MoveWeights &weights, int repeats,
                     NeighborLists const &neighbors, Rng &rng);

// Full offspring education: optional intersection removal (probability
// p_remove), enrichment, improvement (n_local_1 repeats while stagnation <
// n_imprv, n_local_2 afterwards), and a final re-split of the concatenated
// tours.
Individual educate(MtspSolution child, Instance const &instance, NeighborLists const &neighbors,
                   GaConfig const &config, MoveWeights &weights, long stagnation, Rng &rng);

}  // namespace mtsp
