#pragma once

// Independent reference implementations used by the tests. Nothing here calls
// into the solver beyond the Instance distance function.

#include "mtsp/instance.hpp"
#include "mtsp/random.hpp"
#include "mtsp/solution.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

namespace oracle {

using mtsp::Instance;
using mtsp::Point;

inline double closed_length(Instance const &inst, std::vector<int> const &tour)
{
    if (tour.empty())
        return 0.0;
    double len = inst.dist(0, tour.front());
    for (std::size_t i = 1; i < tour.size(); ++i)
        len += inst.dist(tour[i - 1], tour[i]);
    return len + inst.dist(tour.back(), 0);
}

// Optimal depot-closed tour length for every subset of cities 1..n (bit c-1),
// by Held-Karp.
inline std::vector<double> subset_tsp(Instance const &inst)
{
    int const n = inst.num_cities();
    std::size_t const full = std::size_t{1} << n;
    double const inf = std::numeric_limits<double>::infinity();
    // path[mask][j]: shortest path from the depot through mask ending at j.
    std::vector<std::vector<double>> path(full, std::vector<double>(n, inf));
    for (int j = 0; j < n; ++j)
        path[std::size_t{1} << j][j] = inst.dist(0, j + 1);
    for (std::size_t mask = 1; mask < full; ++mask)
        for (int j = 0; j < n; ++j) {
            if (!(mask >> j & 1) || path[mask][j] == inf)
                continue;
            for (int k = 0; k < n; ++k) {
                if (mask >> k & 1)
                    continue;
                auto const next = mask | std::size_t{1} << k;
                path[next][k] = std::min(path[next][k], path[mask][j] + inst.dist(j + 1, k + 1));
            }
        }
    std::vector<double> best(full, inf);
    best[0] = 0.0;
    for (std::size_t mask = 1; mask < full; ++mask)
        for (int j = 0; j < n; ++j)
            if (mask >> j & 1)
                best[mask] = std::min(best[mask], path[mask][j] + inst.dist(j + 1, 0));
    return best;
}

// Min-max mTSP optimum over every partition into m non-empty tours and every
// visiting order.
inline double exhaustive_mtsp(Instance const &inst)
{
    int const n = inst.num_cities();
    int const m = inst.num_salesmen();
    auto const tsp = subset_tsp(inst);
    std::size_t const full = std::size_t{1} << n;
    double const inf = std::numeric_limits<double>::infinity();
    std::vector<double> cur(full, inf);
    for (std::size_t mask = 1; mask < full; ++mask)
        cur[mask] = tsp[mask];
    for (int r = 2; r <= m; ++r) {
        std::vector<double> next(full, inf);
        for (std::size_t mask = 1; mask < full; ++mask)
            for (std::size_t sub = (mask - 1) & mask; sub > 0; sub = (sub - 1) & mask)
                next[mask] = std::min(next[mask], std::max(cur[mask ^ sub], tsp[sub]));
        cur = std::move(next);
    }
    return cur[full - 1];
}

// Exact TSP optimum of the whole instance (depot included).
inline double exhaustive_tsp(Instance const &inst)
{
    return subset_tsp(inst).back();
}

inline double orient(Point a, Point b, Point c)
{
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

inline bool proper_cross(Point a, Point b, Point c, Point d)
{
    double const o1 = orient(a, b, c), o2 = orient(a, b, d);
    double const o3 = orient(c, d, a), o4 = orient(c, d, b);
    return ((o1 > 0 && o2 < 0) || (o1 < 0 && o2 > 0)) && ((o3 > 0 && o4 < 0) || (o3 < 0 && o4 > 0));
}

// Number of properly crossing edge pairs taken from two different tours.
inline int inter_tour_crossings(mtsp::MtspSolution const &sol, Instance const &inst)
{
    std::vector<std::vector<std::pair<int, int>>> edges;
    for (auto const &tour : sol.tours) {
        std::vector<std::pair<int, int>> e;
        if (!tour.empty()) {
            e.emplace_back(0, tour.front());
            for (std::size_t i = 1; i < tour.size(); ++i)
                e.emplace_back(tour[i - 1], tour[i]);
            e.emplace_back(tour.back(), 0);
        }
        edges.push_back(std::move(e));
    }
    int count = 0;
    for (std::size_t a = 0; a < edges.size(); ++a)
        for (std::size_t b = a + 1; b < edges.size(); ++b)
            for (auto [p, q] : edges[a])
                for (auto [r, s] : edges[b])
                    if (proper_cross(inst.coord(p), inst.coord(q), inst.coord(r), inst.coord(s)))
                        ++count;
    return count;
}

inline std::vector<std::vector<int>> city_sets(mtsp::MtspSolution const &sol)
{
    std::vector<std::vector<int>> sets;
    for (auto tour : sol.tours) {
        std::sort(tour.begin(), tour.end());
        sets.push_back(std::move(tour));
    }
    std::sort(sets.begin(), sets.end());
    return sets;
}

// Exhaustive scan for an inter-tour 1-shift (any slot of any other tour) or
// 1-swap (exchange in place) that the enrichment acceptance rules would take.
// `margin` keeps floating noise from reporting phantom moves.
inline bool improving_shift_or_swap_exists(mtsp::MtspSolution const &sol, Instance const &inst,
                                           double margin = 1e-7)
{
    double const makespan = *std::max_element(sol.lengths.begin(), sol.lengths.end());
    for (std::size_t a = 0; a < sol.tours.size(); ++a)
        for (std::size_t pa = 0; pa < sol.tours[a].size(); ++pa)
            for (std::size_t b = 0; b < sol.tours.size(); ++b) {
                if (a == b)
                    continue;
                double const la = closed_length(inst, sol.tours[a]);
                double const lb = closed_length(inst, sol.tours[b]);
                if (sol.tours[a].size() > 1)
                    for (std::size_t slot = 0; slot <= sol.tours[b].size(); ++slot) {
                        auto ta = sol.tours[a];
                        auto tb = sol.tours[b];
                        int const city = ta[pa];
                        ta.erase(ta.begin() + static_cast<std::ptrdiff_t>(pa));
                        tb.insert(tb.begin() + static_cast<std::ptrdiff_t>(slot), city);
                        double const na = closed_length(inst, ta), nb = closed_length(inst, tb);
                        if ((la + lb) - (na + nb) > margin && nb <= makespan - margin && na < la)
                            return true;
                    }
                for (std::size_t pb = 0; pb < sol.tours[b].size(); ++pb) {
                    auto ta = sol.tours[a];
                    auto tb = sol.tours[b];
                    std::swap(ta[pa], tb[pb]);
                    if (closed_length(inst, ta) < la - margin && closed_length(inst, tb) < lb - margin)
                        return true;
                }
            }
    return false;
}

inline std::vector<Point> random_points(int count, mtsp::Rng &rng, double scale = 100.0)
{
    std::vector<Point> pts;
    for (int i = 0; i < count; ++i)
        pts.push_back({rng.uniform01() * scale, rng.uniform01() * scale});
    return pts;
}

inline Instance random_instance(int cities, int m, mtsp::Rng &rng)
{
    return Instance("fuzz", random_points(cities + 1, rng), m);
}

inline std::vector<int> random_permutation(int n, mtsp::Rng &rng)
{
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    rng.shuffle(std::span<int>(perm));
    return perm;
}

// Random partition of a random permutation into m non-empty tours.
inline std::vector<mtsp::Tour> random_tours(int n, int m, mtsp::Rng &rng)
{
    auto perm = random_permutation(n, rng);
    std::vector<int> cuts(n - 1);
    std::iota(cuts.begin(), cuts.end(), 1);
    rng.shuffle(std::span<int>(cuts));
    cuts.resize(m - 1);
    std::sort(cuts.begin(), cuts.end());
    cuts.push_back(n);
    std::vector<mtsp::Tour> tours;
    int start = 0;
    for (int cut : cuts) {
        tours.emplace_back(perm.begin() + start, perm.begin() + cut);
        start = cut;
    }
    return tours;
}

inline bool is_permutation_of_cities(std::vector<int> v, int n)
{
    std::sort(v.begin(), v.end());
    std::vector<int> want(n);
    std::iota(want.begin(), want.end(), 1);
    return v == want;
}

}  // namespace oracle
