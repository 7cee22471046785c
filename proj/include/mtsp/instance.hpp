#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace mtsp {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

enum class Metric {
    EuclidReal,           // unrounded Euclidean distance
    EuclidRoundedTsplib,  // TSPLIB EUC_2D: Euclidean rounded to nearest integer
    PseudoEuclidAtt,      // TSPLIB ATT pseudo-Euclidean
};

std::string to_string(Metric metric);
Metric metric_from_string(std::string const &text);

double metric_distance(Metric metric, Point a, Point b);

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised when an instance or chromosome cannot be split into m non-empty
// tours (fewer cities than salesmen).
class InfeasibleError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A min-max mTSP instance. Node 0 is the depot; nodes 1..n are the cities.
// Immutable after construction, so it can be shared freely between threads.
class Instance {
public:
    // Above this many cities distances are computed on the fly.
    static constexpr int kDenseLimit = 3000;

    // `labels[i]` is the external (1-based file) id of node i; defaults to i+1.
    Instance(std::string name,
             std::vector<Point> coords,
             int salesmen,
             Metric metric = Metric::EuclidReal,
             std::vector<int> labels = {});

    std::string const &name() const { return name_; }
    int num_cities() const { return static_cast<int>(coords_.size()) - 1; }
    int num_nodes() const { return static_cast<int>(coords_.size()); }
    int num_salesmen() const { return salesmen_; }
    Metric metric() const { return metric_; }

    Point const &coord(int node) const { return coords_[node]; }
    std::span<Point const> coords() const { return coords_; }
    int label(int node) const { return labels_[node]; }

    double dist(int i, int j) const
    {
        if (!matrix_.empty())
            return matrix_[static_cast<std::size_t>(i) * coords_.size() + j];
        return metric_distance(metric_, coords_[i], coords_[j]);
    }

    bool dense() const { return !matrix_.empty(); }

    // Same cities, different number of salesmen.
    Instance with_salesmen(int salesmen) const;

private:
    std::string name_;
    std::vector<Point> coords_;
    std::vector<int> labels_;
    int salesmen_;
    Metric metric_;
    std::vector<double> matrix_;
};

struct TsplibOptions {
    std::optional<Metric> metric;   // overrides the metric implied by EDGE_WEIGHT_TYPE
    std::optional<int> depot_node;  // 1-based file node id; default is the first listed node
};

// Reads a TSPLIB file with EDGE_WEIGHT_TYPE EUC_2D or ATT. EUC_2D maps to
// Metric::EuclidReal unless overridden.
Instance parse_tsplib(std::istream &in, int salesmen, TsplibOptions const &options = {});
Instance load_tsplib(std::string const &path, int salesmen, TsplibOptions const &options = {});

// Writes coordinates with round-trip precision, in external label order.
void write_tsplib(Instance const &instance, std::ostream &out);

// n+1 points (depot first) drawn uniformly from the unit square.
Instance random_instance(int cities, int salesmen, std::uint64_t seed);

// For each city, the other cities (depot excluded) by ascending distance,
// truncated to `n_close` entries. Ties are broken by city index.
class NeighborLists {
public:
    NeighborLists() = default;
    NeighborLists(Instance const &instance, int n_close);

    std::span<int const> of(int city) const
    {
        return {flat_.data() + static_cast<std::size_t>(city - 1) * width_, width_};
    }

    int width() const { return static_cast<int>(width_); }

private:
    std::size_t width_ = 0;
    std::vector<int> flat_;
};

}  // namespace mtsp
