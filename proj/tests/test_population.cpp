#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "support.hpp"

#include "mtsp/population.hpp"

#include <sstream>

using namespace mtsp;

namespace {

Individual member(std::vector<int> chromosome)
{
    Individual ind;
    ind.chromosome = std::move(chromosome);
    return ind;
}

}  // namespace

TEST_CASE("hamming distance")
{
    std::vector<int> const a{1, 2, 3};
    CHECK(hamming(a, a) == 0.0);
    CHECK(hamming(a, std::vector<int>{2, 3, 1}) == 1.0);
    CHECK(hamming(std::vector<int>{1, 2, 3, 4}, std::vector<int>{1, 2, 4, 3}) == 0.5);
    CHECK_THROWS_AS(hamming(a, std::vector<int>{1, 2}), std::invalid_argument);
}

TEST_CASE("diversity contribution")
{
    SUBCASE("identical members")
    {
        Population pop{member({1, 2, 3}), member({1, 2, 3}), member({1, 2, 3})};
        for (std::size_t i = 0; i < 3; ++i)
            CHECK(diversity_contribution(i, pop) == 0.0);
    }
    SUBCASE("two full derangements")
    {
        Population pop{member({1, 2, 3}), member({2, 3, 1}), member({3, 1, 2})};
        CHECK(diversity_contribution(0, pop) == 1.0);
    }
    SUBCASE("mean of the two smallest distances")
    {
        std::vector<int> const p{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
        Population pop{member(p),
                       member({2, 1, 3, 4, 5, 6, 7, 8, 9, 10}),   // 0.2
                       member({2, 1, 4, 3, 5, 6, 7, 8, 9, 10}),   // 0.4
                       member({1, 3, 4, 5, 6, 7, 8, 9, 10, 2})};  // 0.9
        CHECK(diversity_contribution(0, pop) == doctest::Approx(0.3));
    }
    SUBCASE("small populations")
    {
        Population one{member({1, 2})};
        CHECK(diversity_contribution(0, one) == 1.0);
        Population two{member({1, 2, 3, 4}), member({1, 2, 4, 3})};
        CHECK(diversity_contribution(0, two) == 0.5);
    }
}

TEST_CASE("biased fitness")
{
    CHECK(biased_fitness(123.0, 0.0, 2, 10) == 123.0);
    CHECK(biased_fitness(100.0, 1.0, 2, 10) == doctest::Approx(80.0));
    CHECK(biased_fitness(100.0, 0.6, 2, 10) < biased_fitness(100.0, 0.3, 2, 10));

    Population pop{member({1, 2, 3}), member({1, 2, 3}), member({3, 1, 2})};
    pop[0].solution.makespan = 10.0;
    pop[1].solution.makespan = 10.0;
    pop[2].solution.makespan = 10.0;
    auto const fit = biased_fitnesses(pop, 0.2);
    REQUIRE(fit.size() == 3);
    // The distinct member is rewarded.
    CHECK(fit[2] < fit[0]);
    CHECK(fit[0] == fit[1]);
}

TEST_CASE("insertion heuristics")
{
    SUBCASE("single city")
    {
        Instance const inst("one", {{0, 0}, {1, 1}}, 1);
        Rng rng(1);
        CHECK(nearest_insertion(inst, rng) == std::vector<int>{1});
        CHECK(farthest_insertion(inst, rng) == std::vector<int>{1});
        CHECK(cheapest_insertion(inst, rng) == std::vector<int>{1});
    }
    SUBCASE("square around a central depot")
    {
        Instance const inst("square", {{0.5, 0.5}, {0, 0}, {1, 0}, {1, 1}, {0, 1}}, 1);
        double const optimum = oracle::exhaustive_tsp(inst);
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            Rng rng(seed);
            for (auto const &tour : {nearest_insertion(inst, rng), farthest_insertion(inst, rng),
                                     cheapest_insertion(inst, rng)}) {
                CHECK(oracle::is_permutation_of_cities(tour, 4));
                CHECK(oracle::closed_length(inst, tour) == doctest::Approx(optimum));
            }
        }
    }
    SUBCASE("cheapest insertion within twice the optimum")
    {
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            Rng rng(seed);
            auto const inst = oracle::random_instance(10, 1, rng);
            double const optimum = oracle::exhaustive_tsp(inst);
            auto const tour = cheapest_insertion(inst, rng);
            CHECK(oracle::is_permutation_of_cities(tour, 10));
            CHECK(oracle::closed_length(inst, tour) <= 2.0 * optimum + 1e-9);
            auto const improved = improved_tsp_tour(inst, rng);
            CHECK(oracle::is_permutation_of_cities(improved, 10));
            CHECK(oracle::closed_length(inst, improved) >= optimum - 1e-9);
        }
    }
}

TEST_CASE("perturbations")
{
    std::vector<int> const six{1, 2, 3, 4, 5, 6};
    CHECK(reverse_segment(six, 1, 4) == std::vector<int>{1, 5, 4, 3, 2, 6});

    Rng rng(77);
    for (int trial = 0; trial < 1000; ++trial) {
        int const n = 1 + static_cast<int>(rng.index(30));
        auto const c = oracle::random_permutation(n, rng);
        auto const out = perturb(c, 1 + static_cast<int>(rng.index(5)), rng);
        CHECK(oracle::is_permutation_of_cities(out, n));
    }

    std::vector<int> const four{1, 2, 3, 4};
    for (int trial = 0; trial < 200; ++trial) {
        auto const out = perturb(four, 2, Perturbation::ShufflePositions, rng);
        int moved = 0;
        for (std::size_t i = 0; i < 4; ++i)
            moved += out[i] != four[i];
        CHECK((moved == 0 || moved == 2));
    }
}

TEST_CASE("initial population")
{
    auto const inst = random_instance(30, 3, 9);
    Rng rng_a(4), rng_b(4);
    auto const base_a = build_base_tours(inst, rng_a);
    auto const base_b = build_base_tours(inst, rng_b);
    CHECK(base_a.tours.size() == 4);
    auto const pop_a = init_population(inst, base_a, 10, rng_a);
    auto const pop_b = init_population(inst, base_b, 10, rng_b);
    REQUIRE(pop_a.size() == 10);
    for (std::size_t i = 0; i < pop_a.size(); ++i) {
        CHECK_FALSE(check_solution(pop_a[i].solution, inst).has_value());
        CHECK(pop_a[i].solution.tours.size() == 3);
        CHECK(pop_a[i].chromosome == pop_b[i].chromosome);
        CHECK(pop_a[i].solution == pop_b[i].solution);
    }

    std::vector<int> imported(30);
    std::iota(imported.begin(), imported.end(), 1);
    Rng rng_c(4);
    auto const with_import = build_base_tours(inst, rng_c, imported);
    CHECK(with_import.tours.size() == 5);
    CHECK(with_import.tours.back() == imported);

    auto const fresh = fresh_individuals(inst, base_a, 6, rng_a);
    CHECK(fresh.size() == 6);
}

TEST_CASE("tour files")
{
    std::istringstream good("3\n1\n2\n");
    CHECK(read_tour_file(good, 3) == std::vector<int>{3, 1, 2});
    std::istringstream dup("1\n1\n2\n");
    CHECK_THROWS(read_tour_file(dup, 3));
    std::istringstream short_file("1\n2\n");
    CHECK_THROWS(read_tour_file(short_file, 3));
    std::istringstream bad("1\nx\n2\n");
    CHECK_THROWS(read_tour_file(bad, 3));
}
