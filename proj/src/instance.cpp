#include "mtsp/instance.hpp"

#include "mtsp/random.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace mtsp {

std::string to_string(Metric metric)
{
    switch (metric) {
    case Metric::EuclidReal: return "real";
    case Metric::EuclidRoundedTsplib: return "tsplib";
    case Metric::PseudoEuclidAtt: return "att";
    }
    return "real";
}

Metric metric_from_string(std::string const &text)
{
    if (text == "real")
        return Metric::EuclidReal;
    if (text == "tsplib")
        return Metric::EuclidRoundedTsplib;
    if (text == "att")
        return Metric::PseudoEuclidAtt;
    throw std::invalid_argument("unknown metric '" + text + "' (expected real|tsplib|att)");
}

double metric_distance(Metric metric, Point a, Point b)
{
    double const dx = a.x - b.x;
    double const dy = a.y - b.y;
    switch (metric) {
    case Metric::EuclidReal: return std::sqrt(dx * dx + dy * dy);
    case Metric::EuclidRoundedTsplib: return std::floor(std::sqrt(dx * dx + dy * dy) + 0.5);
    case Metric::PseudoEuclidAtt: {
        double const r = std::sqrt((dx * dx + dy * dy) / 10.0);
        double const t = std::floor(r + 0.5);
        return t < r ? t + 1.0 : t;
    }
    }
    return 0.0;
}

Instance::Instance(std::string name,
                   std::vector<Point> coords,
                   int salesmen,
                   Metric metric,
                   std::vector<int> labels)
    : name_(std::move(name)),
      coords_(std::move(coords)),
      labels_(std::move(labels)),
      salesmen_(salesmen),
      metric_(metric)
{
    if (coords_.size() < 2)
        throw std::invalid_argument("instance needs a depot and at least one city");
    if (salesmen_ < 1)
        throw std::invalid_argument("number of salesmen must be positive");
    if (num_cities() < salesmen_)
        throw InfeasibleError("instance '" + name_ + "' has " + std::to_string(num_cities())
                              + " cities but " + std::to_string(salesmen_)
                              + " salesmen; every salesman needs at least one city");
    for (auto const &p : coords_)
        if (!std::isfinite(p.x) || !std::isfinite(p.y))
            throw std::invalid_argument("instance '" + name_ + "' has non-finite coordinates");

    if (labels_.empty()) {
        labels_.resize(coords_.size());
        std::iota(labels_.begin(), labels_.end(), 1);
    }
    if (labels_.size() != coords_.size())
        throw std::invalid_argument("label count does not match node count");

    if (num_cities() <= kDenseLimit) {
        auto const size = coords_.size();
        matrix_.assign(size * size, 0.0);
        for (std::size_t i = 0; i < size; ++i)
            for (std::size_t j = i + 1; j < size; ++j) {
                double const d = metric_distance(metric_, coords_[i], coords_[j]);
                matrix_[i * size + j] = d;
                matrix_[j * size + i] = d;
            }
    }
}

Instance Instance::with_salesmen(int salesmen) const
{
    return Instance(name_, coords_, salesmen, metric_, labels_);
}

namespace {

std::string trim(std::string const &s)
{
    auto const begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos)
        return {};
    auto const end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

std::string upper(std::string s)
{
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::toupper(c); });
    return s;
}

[[noreturn]] void fail(int line, std::string const &what)
{
    throw ParseError("line " + std::to_string(line) + ": " + what);
}

}  // namespace

Instance parse_tsplib(std::istream &in, int salesmen, TsplibOptions const &options)
{
    std::string name = "unnamed";
    int dimension = -1;
    std::optional<Metric> implied;
    std::vector<Point> coords;
    std::vector<int> ids;

    std::string raw;
    int line_no = 0;
    bool in_coords = false;
    bool saw_coords = false;

    while (std::getline(in, raw)) {
        ++line_no;
        std::string const line = trim(raw);
        if (line.empty())
            continue;

        if (in_coords) {
            if (upper(line) == "EOF")
                break;
            std::istringstream fields(line);
            int id;
            double x, y;
            if (!(fields >> id >> x >> y)) {
                // Another section header ends the coordinate block.
                if (std::isalpha(static_cast<unsigned char>(line[0]))) {
                    in_coords = false;
                } else {
                    fail(line_no, "malformed coordinate line '" + line + "'");
                }
            } else {
                if (!std::isfinite(x) || !std::isfinite(y))
                    fail(line_no, "non-finite coordinate");
                coords.push_back({x, y});
                ids.push_back(id);
                continue;
            }
        }

        std::string key;
        std::string value;
        if (auto const colon = line.find(':'); colon != std::string::npos) {
            key = upper(trim(line.substr(0, colon)));
            value = trim(line.substr(colon + 1));
        } else {
            std::istringstream fields(line);
            fields >> key;
            key = upper(key);
            std::getline(fields, value);
            value = trim(value);
        }

        if (key == "EOF")
            break;
        if (key == "NODE_COORD_SECTION") {
            if (dimension < 0)
                fail(line_no, "NODE_COORD_SECTION before DIMENSION");
            if (!implied)
                fail(line_no, "NODE_COORD_SECTION before EDGE_WEIGHT_TYPE");
            in_coords = true;
            saw_coords = true;
        } else if (key == "NAME") {
            name = value;
        } else if (key == "TYPE") {
            if (upper(value) != "TSP")
                fail(line_no, "unsupported problem type '" + value + "'");
        } else if (key == "DIMENSION") {
            auto const *first = value.data();
            auto const *last = value.data() + value.size();
            auto const [ptr, ec] = std::from_chars(first, last, dimension);
            if (ec != std::errc() || ptr != last || dimension < 2)
                fail(line_no, "malformed DIMENSION '" + value + "'");
        } else if (key == "EDGE_WEIGHT_TYPE") {
            auto const type = upper(value);
            if (type == "EUC_2D")
                implied = Metric::EuclidReal;
            else if (type == "ATT")
                implied = Metric::PseudoEuclidAtt;
            else
                fail(line_no, "unsupported edge weight type '" + value + "'");
        } else if (key == "COMMENT" || key == "DISPLAY_DATA_TYPE" || key == "NODE_COORD_TYPE") {
            // informational
        } else if (key.ends_with("_SECTION")) {
            fail(line_no, "unsupported section '" + key + "'");
        } else {
            fail(line_no, "unrecognized header '" + line + "'");
        }
    }

    if (!implied)
        fail(line_no, "missing EDGE_WEIGHT_TYPE");
    if (!saw_coords)
        fail(line_no, "missing NODE_COORD_SECTION");
    if (static_cast<int>(coords.size()) != dimension)
        fail(line_no,
             "expected " + std::to_string(dimension) + " coordinates, found "
                 + std::to_string(coords.size()));

    std::size_t depot = 0;
    if (options.depot_node) {
        auto const it = std::find(ids.begin(), ids.end(), *options.depot_node);
        if (it == ids.end())
            throw std::invalid_argument("depot node " + std::to_string(*options.depot_node)
                                        + " not present in instance");
        depot = static_cast<std::size_t>(it - ids.begin());
    }
    if (depot != 0) {
        std::rotate(coords.begin(), coords.begin() + depot, coords.begin() + depot + 1);
        std::rotate(ids.begin(), ids.begin() + depot, ids.begin() + depot + 1);
    }

    return Instance(name, std::move(coords), salesmen, options.metric.value_or(*implied),
                    std::move(ids));
}

Instance load_tsplib(std::string const &path, int salesmen, TsplibOptions const &options)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open instance file '" + path + "'");
    try {
        return parse_tsplib(in, salesmen, options);
    } catch (ParseError const &e) {
        throw ParseError(path + ": " + e.what());
    }
}

void write_tsplib(Instance const &instance, std::ostream &out)
{
    out << "NAME : " << instance.name() << '\n'
        << "TYPE : TSP\n"
        << "DIMENSION : " << instance.num_nodes() << '\n'
        << "EDGE_WEIGHT_TYPE : "
        << (instance.metric() == Metric::PseudoEuclidAtt ? "ATT" : "EUC_2D") << '\n'
        << "NODE_COORD_SECTION\n";

    // External order: sort by label so the depot returns to its file slot.
    std::vector<int> order(instance.num_nodes());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return instance.label(a) < instance.label(b); });
    if (!order.empty() && order.front() != 0) {
        // Depot must be listed first to be recovered as the depot.
        auto const it = std::find(order.begin(), order.end(), 0);
        std::rotate(order.begin(), it, it + 1);
    }

    char buf[128];
    for (int node : order) {
        auto const p = instance.coord(node);
        std::snprintf(buf, sizeof buf, "%d %.17g %.17g\n", instance.label(node), p.x, p.y);
        out << buf;
    }
    out << "EOF\n";
}

Instance random_instance(int cities, int salesmen, std::uint64_t seed)
{
    if (cities < 1 || salesmen < 1)
        throw std::invalid_argument("random instance needs positive city and salesman counts");
    if (cities < salesmen)
        throw std::invalid_argument("random instance needs at least as many cities as salesmen");

    Rng rng(seed);
    std::vector<Point> coords(static_cast<std::size_t>(cities) + 1);
    for (auto &p : coords) {
        p.x = rng.uniform01();
        p.y = rng.uniform01();
    }
    return Instance("rand" + std::to_string(cities + 1) + "_s" + std::to_string(seed),
                    std::move(coords), salesmen, Metric::EuclidReal);
}

NeighborLists::NeighborLists(Instance const &instance, int n_close)
{
    int const n = instance.num_cities();
    width_ = static_cast<std::size_t>(std::clamp(n_close, 0, std::max(0, n - 1)));
    flat_.resize(static_cast<std::size_t>(n) * width_);

    std::vector<int> others;
    others.reserve(n);
    for (int city = 1; city <= n; ++city) {
        others.clear();
        for (int other = 1; other <= n; ++other)
            if (other != city)
                others.push_back(other);
        auto const closer = [&](int a, int b) {
            double const da = instance.dist(city, a);
            double const db = instance.dist(city, b);
            return da < db || (da == db && a < b);
        };
        std::partial_sort(others.begin(), others.begin() + width_, others.end(), closer);
        std::copy_n(others.begin(), width_, flat_.begin() + (city - 1) * width_);
    }
}

}  // namespace mtsp
