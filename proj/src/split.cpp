#include "mtsp/split.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace mtsp {

SplitTables::SplitTables(int positions, int routes)
    : n_(positions),
      m_(routes),
      value_(static_cast<std::size_t>(positions + 1) * (routes + 1), kUnreachable),
      pred_(static_cast<std::size_t>(positions + 1) * (routes + 1), -1)
{
}

namespace {

void require_feasible(std::span<int const> sequence, Instance const &instance)
{
    if (static_cast<int>(sequence.size()) < instance.num_salesmen())
        throw InfeasibleError("cannot split " + std::to_string(sequence.size()) + " cities into "
                              + std::to_string(instance.num_salesmen()) + " non-empty tours");
}

}  // namespace

SplitResult split(std::span<int const> sequence, Instance const &instance)
{
    require_feasible(sequence, instance);

    int const n = static_cast<int>(sequence.size());
    int const m = instance.num_salesmen();
    SplitTables tables(n, m);
    tables.value(0, 0) = 0.0;

    // S is 1-based in the recurrence: S[k] = sequence[k - 1].
    auto const S = [&](int k) { return sequence[k - 1]; };

    for (int k = 0; k < n; ++k) {
        // R_k = {0} at k = 0, {1..min(k, m-1)} for 0 < k < n.
        int const r_lo = k == 0 ? 0 : 1;
        int const r_hi = k == 0 ? 0 : std::min(k, m - 1);
        if (r_lo > r_hi)
            continue;

        double load = 0.0;
        for (int j = k + 1; j <= n; ++j) {
            if (j == k + 1)
                load = instance.dist(0, S(j));
            else
                load += instance.dist(S(j - 1), S(j));
            double const cost = load + instance.dist(S(j), 0);

            // r + 1 must lie in R_j: {1..min(j, m-1)} when j < n, {1..m} at j = n.
            int const next_hi = j < n ? std::min(j, m - 1) : m;
            for (int r = r_lo; r <= r_hi && r + 1 <= next_hi; ++r) {
                double const prefix = tables.value(k, r);
                if (prefix == SplitTables::kUnreachable)
                    continue;
                double const candidate = std::max(prefix, cost);
                if (candidate < tables.value(j, r + 1)) {
                    tables.value(j, r + 1) = candidate;
                    tables.pred(j, r + 1) = k;
                }
            }
        }
    }

    double const makespan = tables.value(n, m);
    return {makespan, std::move(tables)};
}

MtspSolution extract(SplitTables const &tables, std::span<int const> sequence, Instance const &instance)
{
    int const n = static_cast<int>(sequence.size());
    int const m = instance.num_salesmen();
    if (tables.positions() != n || tables.routes() != m)
        throw std::logic_error("split tables do not match the sequence");

    std::vector<Tour> tours(m);
    int j = n;
    for (int r = m; r > 0; --r) {
        int const k = tables.pred(j, r);
        if (k < 0 || k >= j)
            throw std::logic_error("split backtrace failed at position " + std::to_string(j));
        tours[r - 1].assign(sequence.begin() + k, sequence.begin() + j);
        j = k;
    }
    if (j != 0)
        throw std::logic_error("split backtrace did not reach the start of the sequence");

    return make_solution(instance, std::move(tours));
}

MtspSolution split_solution(std::span<int const> sequence, Instance const &instance)
{
    auto const result = split(sequence, instance);
    return extract(result.tables, sequence, instance);
}

BruteForceSplit brute_force_split(std::span<int const> sequence, Instance const &instance)
{
    require_feasible(sequence, instance);
    int const n = static_cast<int>(sequence.size());
    int const m = instance.num_salesmen();
    if (n > 15)
        throw std::invalid_argument("brute_force_split is limited to 15 cities");

    // cuts[i] = start position of tour i + 1; cuts are strictly increasing in [1, n-1].
    std::vector<int> cuts(m - 1);
    for (int i = 0; i < m - 1; ++i)
        cuts[i] = i + 1;

    BruteForceSplit best{SplitTables::kUnreachable, {}};
    while (true) {
        double makespan = 0.0;
        int begin = 0;
        for (int t = 0; t < m; ++t) {
            int const end = t < m - 1 ? cuts[t] : n;
            makespan = std::max(makespan, tour_length(instance, sequence.subspan(begin, end - begin)));
            begin = end;
        }
        if (makespan < best.makespan) {
            best.makespan = makespan;
            best.tours.assign(m, {});
            int b = 0;
            for (int t = 0; t < m; ++t) {
                int const e = t < m - 1 ? cuts[t] : n;
                best.tours[t].assign(sequence.begin() + b, sequence.begin() + e);
                b = e;
            }
        }

        // Next combination in lexicographic order.
        int i = m - 2;
        while (i >= 0 && cuts[i] == n - (m - 1) + i)
            --i;
        if (i < 0)
            break;
        ++cuts[i];
        for (int k = i + 1; k < m - 1; ++k)
            cuts[k] = cuts[k - 1] + 1;
    }
    return best;
}

}  // namespace mtsp
