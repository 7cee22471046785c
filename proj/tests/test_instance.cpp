#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "support.hpp"

#include "mtsp/instance.hpp"

#include <sstream>

using namespace mtsp;

namespace {

std::string const kToy = "NAME : toy\n"
                         "TYPE : TSP\n"
                         "DIMENSION : 3\n"
                         "EDGE_WEIGHT_TYPE : EUC_2D\n"
                         "NODE_COORD_SECTION\n"
                         "1 0 0\n"
                         "2 3 0\n"
                         "3 0 4\n"
                         "EOF\n";

Instance parse(std::string const &text, int m, TsplibOptions const &options = {})
{
    std::istringstream in(text);
    return parse_tsplib(in, m, options);
}

}  // namespace

TEST_CASE("metric distances")
{
    CHECK(metric_distance(Metric::EuclidReal, {0, 0}, {3, 4}) == 5.0);
    CHECK(metric_distance(Metric::EuclidRoundedTsplib, {0, 0}, {1, 1}) == 1.0);
    CHECK(metric_distance(Metric::EuclidRoundedTsplib, {0, 0}, {1.5, 0}) == 2.0);
    // r = sqrt(10) = 3.162..., rounds to 3 < r, so 4.
    CHECK(metric_distance(Metric::PseudoEuclidAtt, {0, 0}, {10, 0}) == 4.0);
    CHECK(metric_distance(Metric::PseudoEuclidAtt, {0, 0}, {0, 10}) == 4.0);
    // r = sqrt(1000 / 10) = 10 exactly, no bump.
    CHECK(metric_distance(Metric::PseudoEuclidAtt, {0, 0}, {30, 10}) == 10.0);
    CHECK(metric_from_string("att") == Metric::PseudoEuclidAtt);
    CHECK(to_string(Metric::EuclidRoundedTsplib) == "tsplib");
    CHECK_THROWS_AS(metric_from_string("geo"), std::invalid_argument);
}

TEST_CASE("toy TSPLIB file")
{
    auto const inst = parse(kToy, 2);
    CHECK(inst.num_cities() == 2);
    CHECK(inst.num_nodes() == 3);
    CHECK(inst.num_salesmen() == 2);
    CHECK(inst.name() == "toy");
    CHECK(inst.dist(1, 2) == 5.0);
    CHECK(inst.dist(2, 1) == 5.0);
    CHECK(inst.dist(0, 2) == 4.0);
    CHECK(inst.dist(1, 1) == 0.0);
    CHECK(inst.label(0) == 1);
}

TEST_CASE("depot override moves the chosen node to index 0")
{
    TsplibOptions options;
    options.depot_node = 3;
    auto const inst = parse(kToy, 1, options);
    CHECK(inst.label(0) == 3);
    CHECK(inst.coord(0).y == 4.0);
    CHECK(inst.dist(0, 1) + inst.dist(0, 2) == doctest::Approx(4.0 + 5.0));

    options.depot_node = 9;
    CHECK_THROWS(parse(kToy, 1, options));
}

TEST_CASE("bundled eil51 file")
{
    auto const inst = load_tsplib(MTSP_TEST_DATA "/eil51.tsp", 3);
    CHECK(inst.num_cities() == 50);
    CHECK(inst.num_nodes() == 51);
    CHECK(inst.num_salesmen() == 3);
    CHECK(inst.label(0) == 1);
    CHECK(inst.coord(0).x == 37.0);
    CHECK(inst.coord(0).y == 52.0);
    CHECK(inst.metric() == Metric::EuclidReal);
}

TEST_CASE("rejected inputs")
{
    auto const explicit_weights = "NAME : x\nTYPE : TSP\nDIMENSION : 3\nEDGE_WEIGHT_TYPE : EXPLICIT\n"
                                  "EDGE_WEIGHT_SECTION\n1 2 3\nEOF\n";
    try {
        parse(explicit_weights, 1);
        FAIL("expected a parse error");
    } catch (ParseError const &e) {
        CHECK(std::string(e.what()).find("unsupported edge weight type") != std::string::npos);
    }

    CHECK_THROWS_AS(parse(kToy, 3), InfeasibleError);
    CHECK_THROWS_AS(parse(kToy, 0), std::invalid_argument);

    auto truncated = kToy.substr(0, kToy.find("3 0 4"));
    CHECK_THROWS_AS(parse(truncated, 1), ParseError);

    auto garbage = kToy;
    garbage.replace(garbage.find("3 0\n"), 3, "3 x");
    CHECK_THROWS_AS(parse(garbage, 1), ParseError);

    CHECK_THROWS(Instance("nan", {{0, 0}, {std::nan(""), 1}}, 1));
}

TEST_CASE("ATT file picks the ATT metric")
{
    auto text = kToy;
    text.replace(text.find("EUC_2D"), 6, "ATT");
    auto const inst = parse(text, 1);
    CHECK(inst.metric() == Metric::PseudoEuclidAtt);
}

TEST_CASE("write and re-read round trip")
{
    auto const inst = random_instance(12, 2, 5);
    std::stringstream buffer;
    write_tsplib(inst, buffer);
    auto const back = parse_tsplib(buffer, 2);
    REQUIRE(back.num_nodes() == inst.num_nodes());
    for (int i = 0; i < inst.num_nodes(); ++i) {
        CHECK(back.coord(i).x == inst.coord(i).x);
        CHECK(back.coord(i).y == inst.coord(i).y);
    }
}

TEST_CASE("random instances")
{
    auto const a = random_instance(49, 5, 7);
    auto const b = random_instance(49, 5, 7);
    auto const c = random_instance(49, 5, 8);
    REQUIRE(a.num_nodes() == 50);
    bool differs = false;
    for (int i = 0; i < a.num_nodes(); ++i) {
        CHECK(a.coord(i).x == b.coord(i).x);
        CHECK(a.coord(i).y == b.coord(i).y);
        differs = differs || a.coord(i).x != c.coord(i).x || a.coord(i).y != c.coord(i).y;
        CHECK(a.coord(i).x >= 0.0);
        CHECK(a.coord(i).x < 1.0);
    }
    CHECK(differs);
    CHECK_THROWS_AS(random_instance(2, 5, 1), std::invalid_argument);
}

TEST_CASE("neighbor lists")
{
    SUBCASE("nearest on a line")
    {
        Instance const line("line", {{0, 0}, {1, 0}, {2, 0}, {3, 0}}, 1);
        NeighborLists const nl(line, 1);
        REQUIRE(nl.of(1).size() == 1);
        CHECK(nl.of(1)[0] == 2);
        CHECK(nl.of(3)[0] == 2);
        // City 2 is equidistant from 1 and 3; lower index wins.
        CHECK(nl.of(2)[0] == 1);
    }

    SUBCASE("full width and truncation against a full sort")
    {
        Rng rng(3);
        auto const inst = oracle::random_instance(20, 2, rng);
        for (int width : {1, 5, 19, 40}) {
            NeighborLists const nl(inst, width);
            int const expected_width = std::min(width, 19);
            CHECK(nl.width() == expected_width);
            for (int c = 1; c <= 20; ++c) {
                std::vector<int> others;
                for (int o = 1; o <= 20; ++o)
                    if (o != c)
                        others.push_back(o);
                std::stable_sort(others.begin(), others.end(),
                                 [&](int x, int y) { return inst.dist(c, x) < inst.dist(c, y); });
                others.resize(expected_width);
                auto const got = nl.of(c);
                CHECK(std::vector<int>(got.begin(), got.end()) == others);
            }
        }
    }
}
