#pragma once

#include "mtsp/instance.hpp"
#include "mtsp/solution.hpp"

#include <limits>
#include <span>
#include <vector>

namespace mtsp {

// Dynamic-programming tables over (position k, completed routes r).
// value(k, r) is the best makespan of a prefix of k cities served by r
// closed routes; pred(k, r) is the position where the last of those routes
// starts (minus one). Unreachable cells hold +infinity and pred -1.
class SplitTables {
public:
    static constexpr double kUnreachable = std::numeric_limits<double>::infinity();

    SplitTables(int positions, int routes);

    int positions() const { return n_; }
    int routes() const { return m_; }

    double value(int k, int r) const { return value_[index(k, r)]; }
    int pred(int k, int r) const { return pred_[index(k, r)]; }

    double &value(int k, int r) { return value_[index(k, r)]; }
    int &pred(int k, int r) { return pred_[index(k, r)]; }

private:
    std::size_t index(int k, int r) const
    {
        return static_cast<std::size_t>(k) * (m_ + 1) + r;
    }

    int n_;
    int m_;
    std::vector<double> value_;
    std::vector<int> pred_;
};

struct SplitResult {
    double makespan;
    SplitTables tables;
};

// Optimal min-max partition of `sequence` (a permutation of cities, depot
// excluded) into m consecutive non-empty depot-closed segments, O(n^2 m).
// Throws InfeasibleError when the sequence has fewer cities than salesmen.
SplitResult split(std::span<int const> sequence, Instance const &instance);

// Recovers the tours by backtracking the predecessor table. Throws
// std::logic_error if the backtrace does not reach (0, 0).
MtspSolution extract(SplitTables const &tables, std::span<int const> sequence, Instance const &instance);

// split followed by extract.
MtspSolution split_solution(std::span<int const> sequence, Instance const &instance);

struct BruteForceSplit {
    double makespan;
    std::vector<Tour> tours;
};

// Enumerates all C(n-1, m-1) delimiter placements. Limited to n <= 15.
BruteForceSplit brute_force_split(std::span<int const> sequence, Instance const &instance);

}  // namespace mtsp
