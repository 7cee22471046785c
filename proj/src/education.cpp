#include "mtsp/education.hpp"

#include "mtsp/split.hpp"
#include "mtsp/tour_ops.hpp"

#include <algorithm>
#include <limits>

namespace mtsp {

namespace {

double orientation(Point a, Point b, Point c)
{
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

}  // namespace

bool segments_properly_cross(Point p1, Point p2, Point q1, Point q2)
{
    double const o1 = orientation(p1, p2, q1);
    double const o2 = orientation(p1, p2, q2);
    double const o3 = orientation(q1, q2, p1);
    double const o4 = orientation(q1, q2, p2);
    return ((o1 > 0 && o2 < 0) || (o1 < 0 && o2 > 0)) && ((o3 > 0 && o4 < 0) || (o3 < 0 && o4 > 0));
}

namespace {

// Node at path position i of a depot-closed tour: 0, tour..., 0.
int path_node(Tour const &tour, std::size_t i)
{
    return i == 0 || i > tour.size() ? 0 : tour[i - 1];
}

struct Crossing {
    std::size_t a, b;    // tours
    std::size_t i, j;    // edge (path i, path i+1) of a and (path j, path j+1) of b
};

std::optional<Crossing> find_crossing(MtspSolution const &solution, Instance const &instance)
{
    auto const &tours = solution.tours;
    for (std::size_t a = 0; a < tours.size(); ++a)
        for (std::size_t b = a + 1; b < tours.size(); ++b)
            for (std::size_t i = 0; i <= tours[a].size(); ++i) {
                Point const p1 = instance.coord(path_node(tours[a], i));
                Point const p2 = instance.coord(path_node(tours[a], i + 1));
                for (std::size_t j = 0; j <= tours[b].size(); ++j) {
                    Point const q1 = instance.coord(path_node(tours[b], j));
                    Point const q2 = instance.coord(path_node(tours[b], j + 1));
                    if (segments_properly_cross(p1, p2, q1, q2))
                        return Crossing{a, b, i, j};
                }
            }
    return std::nullopt;
}

// Refills an empty tour with the city of the longest tour that is cheapest to
// serve alone relative to what its removal saves.
void repair_empty_tours(MtspSolution &solution, Instance const &instance, IntersectionStats *stats)
{
    for (auto &tour : solution.tours) {
        if (!tour.empty())
            continue;
        auto const donor = solution.longest();
        auto &from = solution.tours[donor];
        if (from.size() < 2)
            continue;
        std::size_t best = 0;
        double best_score = -std::numeric_limits<double>::infinity();
        for (std::size_t pos = 0; pos < from.size(); ++pos) {
            int const prev = pos == 0 ? 0 : from[pos - 1];
            int const next = pos + 1 == from.size() ? 0 : from[pos + 1];
            int const c = from[pos];
            double const saving = instance.dist(prev, c) + instance.dist(c, next) - instance.dist(prev, next);
            double const score = saving - 2.0 * instance.dist(0, c);
            if (score > best_score) {
                best_score = score;
                best = pos;
            }
        }
        tour.push_back(from[best]);
        from.erase(from.begin() + best);
        refresh(solution, instance);
        if (stats)
            ++stats->empty_repairs;
    }
}

}  // namespace

MtspSolution remove_intersections(MtspSolution solution, Instance const &instance, IntersectionStats *stats)
{
    long const guard = 10L * instance.num_cities();
    long swaps = 0;
    while (auto crossing = find_crossing(solution, instance)) {
        if (swaps >= guard) {
            if (stats)
                stats->guard_tripped = true;
            break;
        }
        auto const [a, b, i, j] = *crossing;
        Tour &A = solution.tours[a];
        Tour &B = solution.tours[b];

        // A keeps a_1..a_i and takes b_{j+1}.., B keeps b_1..b_j and takes a_{i+1}..
        Tour new_a(A.begin(), A.begin() + i);
        new_a.insert(new_a.end(), B.begin() + j, B.end());
        Tour new_b(B.begin(), B.begin() + j);
        new_b.insert(new_b.end(), A.begin() + i, A.end());
        A = std::move(new_a);
        B = std::move(new_b);
        ++swaps;
    }
    refresh(solution, instance);
    if (stats)
        stats->swaps += static_cast<int>(swaps);
    repair_empty_tours(solution, instance, stats);
    return solution;
}

namespace {

// Tours plus city -> (tour, position) lookup.
class TourIndex {
public:
    TourIndex(MtspSolution &solution, int num_cities)
        : solution_(solution),
          tour_of_(static_cast<std::size_t>(num_cities) + 1, -1),
          pos_of_(static_cast<std::size_t>(num_cities) + 1, -1)
    {
        for (std::size_t t = 0; t < solution_.tours.size(); ++t)
            reindex(t);
    }

    void reindex(std::size_t t)
    {
        auto const &tour = solution_.tours[t];
        for (std::size_t p = 0; p < tour.size(); ++p) {
            tour_of_[tour[p]] = static_cast<int>(t);
            pos_of_[tour[p]] = static_cast<int>(p);
        }
    }

    int tour_of(int city) const { return tour_of_[city]; }
    int pos_of(int city) const { return pos_of_[city]; }

    int prev(int city) const
    {
        int const p = pos_of_[city];
        return p == 0 ? 0 : solution_.tours[tour_of_[city]][p - 1];
    }

    int next(int city) const
    {
        auto const &tour = solution_.tours[tour_of_[city]];
        auto const p = static_cast<std::size_t>(pos_of_[city]);
        return p + 1 == tour.size() ? 0 : tour[p + 1];
    }

private:
    MtspSolution &solution_;
    std::vector<int> tour_of_;
    std::vector<int> pos_of_;
};

double max_length(std::vector<double> const &lengths)
{
    return lengths.empty() ? 0.0 : *std::max_element(lengths.begin(), lengths.end());
}

// Best accepted 1-shift or 1-swap for `city`; applies it and returns true.
bool shift_or_swap(MtspSolution &sol, TourIndex &index, int city, Instance const &instance,
                   NeighborLists const &neighbors, EnrichStats *stats)
{
    auto const &d = instance;
    int const t = index.tour_of(city);
    int const pc = index.prev(city);
    int const nc = index.next(city);
    double const gain = d.dist(pc, city) + d.dist(city, nc) - d.dist(pc, nc);
    double const makespan = sol.makespan;
    bool const can_shift = sol.tours[t].size() > 1;

    enum class Kind { None, Shift, Swap } kind = Kind::None;
    double best = kMoveEpsilon;
    int target_tour = -1;
    std::size_t target_slot = 0;
    int partner = -1;

    for (int nb : neighbors.of(city)) {
        int const u = index.tour_of(nb);
        if (u == t)
            continue;
        auto const &U = sol.tours[u];
        auto const q = static_cast<std::size_t>(index.pos_of(nb));

        if (can_shift) {
            for (std::size_t slot : {q, q + 1}) {
                int const x = slot == 0 ? 0 : U[slot - 1];
                int const y = slot == U.size() ? 0 : U[slot];
                double const increase = d.dist(x, city) + d.dist(city, y) - d.dist(x, y);
                double const value = gain - increase;
                if (value > best && sol.lengths[u] + increase <= makespan) {
                    best = value;
                    kind = Kind::Shift;
                    target_tour = u;
                    target_slot = slot;
                }
            }
        }

        int const pn = index.prev(nb);
        int const nn = index.next(nb);
        double const dt = d.dist(pc, nb) + d.dist(nb, nc) - d.dist(pc, city) - d.dist(city, nc);
        double const du = d.dist(pn, city) + d.dist(city, nn) - d.dist(pn, nb) - d.dist(nb, nn);
        if (dt < -kMoveEpsilon && du < -kMoveEpsilon && -(dt + du) > best) {
            best = -(dt + du);
            kind = Kind::Swap;
            target_tour = u;
            partner = nb;
        }
    }

    if (kind == Kind::None)
        return false;

    auto &T = sol.tours[t];
    auto &U = sol.tours[target_tour];
    Tour const old_t = T;
    Tour const old_u = U;
    double const old_len_t = sol.lengths[t];
    double const old_len_u = sol.lengths[target_tour];

    if (kind == Kind::Shift) {
        T.erase(T.begin() + index.pos_of(city));
        U.insert(U.begin() + static_cast<std::ptrdiff_t>(target_slot), city);
    } else {
        T[index.pos_of(city)] = partner;
        U[index.pos_of(partner)] = city;
    }
    double const len_t = tour_length(instance, T);
    double const len_u = tour_length(instance, U);

    // Re-check on recomputed lengths so rounding never breaks the rules.
    bool const ok = kind == Kind::Shift
                        ? len_t < old_len_t && len_u <= makespan && len_t + len_u < old_len_t + old_len_u
                        : len_t < old_len_t && len_u < old_len_u;
    if (!ok) {
        T = old_t;
        U = old_u;
        return false;
    }

    sol.lengths[t] = len_t;
    sol.lengths[target_tour] = len_u;
    sol.makespan = max_length(sol.lengths);
    index.reindex(t);
    index.reindex(static_cast<std::size_t>(target_tour));
    if (stats)
        ++(kind == Kind::Shift ? stats->shifts : stats->swaps);
    return true;
}

}  // namespace

MtspSolution enrich(MtspSolution solution, Instance const &instance, NeighborLists const &neighbors,
                    EnrichStats *stats)
{
    refresh(solution, instance);
    TourIndex index(solution, instance.num_cities());

    while (true) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t t = 0; t < solution.tours.size(); ++t) {
                Tour const snapshot = solution.tours[t];
                for (int city : snapshot) {
                    if (index.tour_of(city) != static_cast<int>(t))
                        continue;
                    if (shift_or_swap(solution, index, city, instance, neighbors, stats))
                        changed = true;
                }
            }
        }

        int moves = 0;
        for (std::size_t t = 0; t < solution.tours.size(); ++t) {
            int const made = two_opt(solution.tours[t], instance);
            if (made > 0) {
                moves += made;
                index.reindex(t);
            }
        }
        if (stats)
            stats->two_opt_moves += moves;
        if (moves == 0)
            break;
        refresh(solution, instance);
    }
    return solution;
}

IntraMove MoveWeights::pick(Rng &rng) const
{
    double total = 0.0;
    for (double w : weights)
        total += w;
    double r = rng.uniform01() * total;
    for (std::size_t i = 0; i + 1 < kIntraMoveCount; ++i) {
        if (r < weights[i])
            return static_cast<IntraMove>(i);
        r -= weights[i];
    }
    return static_cast<IntraMove>(kIntraMoveCount - 1);
}

namespace {

int block_size(IntraMove move)
{
    switch (move) {
    case IntraMove::OrOpt2: return 2;
    case IntraMove::OrOpt3: return 3;
    default: return 1;
    }
}

// One randomized intra-tour move on tour `t`. Returns true if applied.
bool intra_move(MtspSolution &sol, TourIndex &index, std::size_t t, IntraMove move, Instance const &instance,
                NeighborLists const &neighbors, Rng &rng)
{
    auto const &d = instance;
    Tour &T = sol.tours[t];
    std::size_t const k = T.size();
    auto const b = static_cast<std::size_t>(block_size(move));
    if (k < b + 1)
        return false;

    std::size_t const p = rng.index(k - b + 1);
    auto const at = [&](std::ptrdiff_t i) {
        return i < 0 || static_cast<std::size_t>(i) >= k ? 0 : T[static_cast<std::size_t>(i)];
    };

    double best = -kMoveEpsilon;
    Tour candidate;

    if (move == IntraMove::Exchange) {
        int const c = T[p];
        std::size_t best_q = k;
        for (int nb : neighbors.of(c)) {
            if (index.tour_of(nb) != static_cast<int>(t))
                continue;
            auto const q = static_cast<std::size_t>(index.pos_of(nb));
            auto const i = static_cast<std::ptrdiff_t>(std::min(p, q));
            auto const j = static_cast<std::ptrdiff_t>(std::max(p, q));
            int const ci = at(i), cj = at(j);
            double delta;
            if (j == i + 1) {
                delta = d.dist(at(i - 1), cj) + d.dist(ci, at(j + 1)) - d.dist(at(i - 1), ci)
                        - d.dist(cj, at(j + 1));
            } else {
                delta = d.dist(at(i - 1), cj) + d.dist(cj, at(i + 1)) + d.dist(at(j - 1), ci)
                        + d.dist(ci, at(j + 1)) - d.dist(at(i - 1), ci) - d.dist(ci, at(i + 1))
                        - d.dist(at(j - 1), cj) - d.dist(cj, at(j + 1));
            }
            if (delta < best) {
                best = delta;
                best_q = q;
            }
        }
        if (best_q == k)
            return false;
        candidate = T;
        std::swap(candidate[p], candidate[best_q]);
    } else {
        auto const P = static_cast<std::ptrdiff_t>(p);
        auto const B = static_cast<std::ptrdiff_t>(b);
        int const first = T[p];
        int const last = T[p + b - 1];
        int const a = at(P - 1);
        int const z = at(P + B);
        double const gain = d.dist(a, first) + d.dist(last, z) - d.dist(a, z);

        std::size_t best_slot = k + 1;
        bool best_reversed = false;
        for (int nb : neighbors.of(first)) {
            if (index.tour_of(nb) != static_cast<int>(t))
                continue;
            auto const q = static_cast<std::size_t>(index.pos_of(nb));
            if (q >= p && q < p + b)
                continue;
            for (std::size_t slot : {q, q + 1}) {
                // Slots p..p+b touch the block itself.
                if (slot >= p && slot <= p + b)
                    continue;
                auto const S = static_cast<std::ptrdiff_t>(slot);
                int const x = at(S - 1);
                int const y = at(S);
                double const base = d.dist(x, y);
                double const forward = d.dist(x, first) + d.dist(last, y) - base - gain;
                if (forward < best) {
                    best = forward;
                    best_slot = slot;
                    best_reversed = false;
                }
                if (b > 1) {
                    double const reversed = d.dist(x, last) + d.dist(first, y) - base - gain;
                    if (reversed < best) {
                        best = reversed;
                        best_slot = slot;
                        best_reversed = true;
                    }
                }
            }
        }
        if (best_slot == k + 1)
            return false;

        Tour block(T.begin() + P, T.begin() + P + B);
        if (best_reversed)
            std::reverse(block.begin(), block.end());
        candidate = T;
        candidate.erase(candidate.begin() + P, candidate.begin() + P + B);
        std::size_t const insert_at = best_slot > p ? best_slot - b : best_slot;
        candidate.insert(candidate.begin() + static_cast<std::ptrdiff_t>(insert_at), block.begin(), block.end());
    }

    double const length = tour_length(instance, candidate);
    if (!(length < sol.lengths[t]))
        return false;
    T = std::move(candidate);
    sol.lengths[t] = length;
    sol.makespan = max_length(sol.lengths);
    index.reindex(t);
    return true;
}

}  // namespace

MtspSolution improve(MtspSolution solution, Instance const &instance, MoveWeights &weights, int repeats,
                     NeighborLists const &neighbors, Rng &rng)
{
    if (repeats <= 0 || solution.tours.empty())
        return solution;
    refresh(solution, instance);
    TourIndex index(solution, instance.num_cities());

    for (int rep = 0; rep < repeats; ++rep) {
        IntraMove const move = weights.pick(rng);
        std::size_t const t = rng.bernoulli(0.5) ? solution.longest() : rng.index(solution.tours.size());
        if (intra_move(solution, index, t, move, instance, neighbors, rng))
            weights[move] += 1.0;
    }
    return solution;
}

Individual educate(MtspSolution child, Instance const &instance, NeighborLists const &neighbors,
                   GaConfig const &config, MoveWeights &weights, long stagnation, Rng &rng)
{
    if (rng.bernoulli(config.p_remove))
        child = remove_intersections(std::move(child), instance);
    if (config.enrich)
        child = enrich(std::move(child), instance, neighbors);
    int const repeats = stagnation < config.n_imprv ? config.n_local_1 : config.n_local_2;
    child = improve(std::move(child), instance, weights, repeats, neighbors, rng);
    return evaluate(child.giant_tour(), instance);
}

}  // namespace mtsp
