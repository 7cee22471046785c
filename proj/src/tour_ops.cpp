#include "mtsp/tour_ops.hpp"

#include <algorithm>

namespace mtsp {

int two_opt(Tour &tour, Instance const &instance)
{
    int const k = static_cast<int>(tour.size());
    if (k < 3)
        return 0;

    // path[0] = path[k + 1] = depot.
    std::vector<int> path(k + 2, 0);
    std::copy(tour.begin(), tour.end(), path.begin() + 1);

    int moves = 0;
    bool improved = true;
    while (improved) {
        improved = false;
        for (int i = 0; i < k - 1; ++i) {
            int const a = path[i];
            for (int j = i + 2; j <= k; ++j) {
                int const b = path[i + 1];
                int const c = path[j];
                int const d = path[j + 1];
                double const delta = instance.dist(a, c) + instance.dist(b, d)
                                     - instance.dist(a, b) - instance.dist(c, d);
                if (delta < -kMoveEpsilon) {
                    std::reverse(path.begin() + i + 1, path.begin() + j + 1);
                    ++moves;
                    improved = true;
                }
            }
        }
    }

    std::copy(path.begin() + 1, path.end() - 1, tour.begin());
    return moves;
}

}  // namespace mtsp
