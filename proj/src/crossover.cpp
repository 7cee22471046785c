#include "mtsp/crossover.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace mtsp {

namespace {

constexpr int kStxAttempts = 8;

// Position in `tour` (0..size) where inserting `city` costs least, and that cost.
std::pair<std::size_t, double> cheapest_slot(Instance const &instance, Tour const &tour, int city)
{
    std::size_t best = 0;
    double best_cost = std::numeric_limits<double>::infinity();
    for (std::size_t pos = 0; pos <= tour.size(); ++pos) {
        int const prev = pos == 0 ? 0 : tour[pos - 1];
        int const next = pos == tour.size() ? 0 : tour[pos];
        double const cost = instance.dist(prev, city) + instance.dist(city, next) - instance.dist(prev, next);
        if (cost < best_cost) {
            best_cost = cost;
            best = pos;
        }
    }
    return {best, best_cost};
}

std::vector<Tour> recombine(MtspSolution const &p1, MtspSolution const &p2, int num_cities, Rng &rng,
                            StxTrace *trace)
{
    std::size_t const m = p1.tours.size();
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), 0);
    rng.shuffle(std::span(order));

    std::vector<char> used(m, 0);
    std::vector<char> in_a(static_cast<std::size_t>(num_cities) + 1, 0);
    std::vector<Tour> child;
    child.reserve(m);

    for (auto a : order) {
        Tour const &A = p1.tours[a];
        for (int c : A)
            in_a[c] = 1;

        std::size_t match = m;
        long best_common = -1;
        for (std::size_t b = 0; b < m; ++b) {
            if (used[b])
                continue;
            long common = 0;
            for (int c : p2.tours[b])
                common += in_a[c];
            if (common > best_common) {
                best_common = common;
                match = b;
            }
        }
        for (int c : A)
            in_a[c] = 0;
        used[match] = 1;
        if (trace)
            trace->matches.emplace_back(static_cast<int>(a), static_cast<int>(match));

        Tour const &B = p2.tours[match];
        std::size_t const limit = std::min(A.size(), B.size());
        std::size_t lo = rng.index(limit + 1);
        std::size_t hi = rng.index(limit + 1);
        if (lo > hi)
            std::swap(lo, hi);

        Tour const &shorter = B.size() < A.size() ? B : A;
        Tour const &other = B.size() < A.size() ? A : B;
        Tour tour(other.begin(), other.begin() + lo);
        tour.insert(tour.end(), shorter.begin() + lo, shorter.begin() + hi);
        tour.insert(tour.end(), other.begin() + hi, other.end());
        child.push_back(std::move(tour));
    }
    return child;
}

}  // namespace

MtspSolution stx(MtspSolution const &p1, MtspSolution const &p2, Instance const &instance, Rng &rng,
                 StxTrace *trace)
{
    if (p1.tours.size() != p2.tours.size())
        throw std::invalid_argument("stx parents must have the same number of tours");

    int const n = instance.num_cities();
    for (int attempt = 0; attempt < kStxAttempts; ++attempt) {
        if (trace) {
            trace->matches.clear();
            trace->duplicates_removed = 0;
            trace->missing_inserted = 0;
            trace->retries = attempt;
        }

        auto tours = recombine(p1, p2, n, rng, trace);

        std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
        for (auto &tour : tours) {
            auto const kept = std::remove_if(tour.begin(), tour.end(), [&](int c) {
                if (seen[c])
                    return true;
                seen[c] = 1;
                return false;
            });
            if (trace)
                trace->duplicates_removed += static_cast<int>(tour.end() - kept);
            tour.erase(kept, tour.end());
        }

        std::vector<int> missing;
        for (int c = 1; c <= n; ++c)
            if (!seen[c])
                missing.push_back(c);
        rng.shuffle(std::span(missing));

        std::vector<double> lengths(tours.size());
        for (std::size_t t = 0; t < tours.size(); ++t)
            lengths[t] = tour_length(instance, tours[t]);

        for (int city : missing) {
            auto const longest = static_cast<std::size_t>(
                std::max_element(lengths.begin(), lengths.end()) - lengths.begin());
            bool const all_longest = std::all_of(lengths.begin(), lengths.end(),
                                                 [&](double l) { return l == lengths[longest]; });

            std::size_t best_tour = tours.size();
            std::size_t best_pos = 0;
            double best_cost = std::numeric_limits<double>::infinity();
            for (std::size_t t = 0; t < tours.size(); ++t) {
                if (t == longest && !all_longest)
                    continue;
                auto const [pos, cost] = cheapest_slot(instance, tours[t], city);
                if (cost < best_cost) {
                    best_cost = cost;
                    best_tour = t;
                    best_pos = pos;
                }
            }
            tours[best_tour].insert(tours[best_tour].begin() + best_pos, city);
            lengths[best_tour] = tour_length(instance, tours[best_tour]);
            if (trace)
                ++trace->missing_inserted;
        }

        bool const complete
            = std::none_of(tours.begin(), tours.end(), [](Tour const &t) { return t.empty(); });
        if (complete)
            return make_solution(instance, std::move(tours));
    }

    if (trace) {
        trace->fell_back = true;
        trace->retries = kStxAttempts;
    }
    return make_solution(instance, p1.tours);
}

std::vector<int> ox_with_slice(std::span<int const> p1, std::span<int const> p2, std::size_t begin,
                               std::size_t end)
{
    if (p1.size() != p2.size())
        throw std::invalid_argument("ox parents must have equal length");
    if (begin > end || end > p1.size())
        throw std::out_of_range("ox slice out of range");

    int const max_city = p1.empty() ? 0 : *std::max_element(p1.begin(), p1.end());
    std::vector<char> taken(static_cast<std::size_t>(max_city) + 1, 0);
    std::vector<int> child(p1.size(), 0);
    for (std::size_t i = begin; i < end; ++i) {
        child[i] = p1[i];
        taken[p1[i]] = 1;
    }

    std::size_t pos = 0;
    for (int city : p2) {
        if (city <= max_city && taken[city])
            continue;
        if (pos == begin)
            pos = end;
        child[pos++] = city;
    }
    return child;
}

std::vector<int> ox(std::span<int const> p1, std::span<int const> p2, Rng &rng)
{
    std::size_t const n = p1.size();
    if (n == 0)
        return {};
    std::size_t a = rng.index(n);
    std::size_t b = rng.index(n);
    if (a > b)
        std::swap(a, b);
    return ox_with_slice(p1, p2, a, b + 1);
}

}  // namespace mtsp
