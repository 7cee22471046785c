#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "support.hpp"

#include "mtsp/ga.hpp"

using namespace mtsp;

namespace {

Individual with_minmax(double value, std::vector<int> chromosome = {1})
{
    Individual ind;
    ind.chromosome = std::move(chromosome);
    ind.solution.makespan = value;
    return ind;
}

}  // namespace

TEST_CASE("tournament selection")
{
    std::vector<double> const fitness{5.0, 3.0, 9.0, 1.0, 7.0};
    Rng rng(1);
    for (int i = 0; i < 100; ++i)
        CHECK(tournament_select(fitness, 5, rng) == 3);

    std::array<int, 5> counts{};
    for (int i = 0; i < 5000; ++i)
        ++counts[tournament_select(fitness, 1, rng)];
    for (int c : counts)
        CHECK(c == doctest::Approx(1000).epsilon(0.15));

    std::vector<double> const flat(6, 2.0);
    for (int i = 0; i < 100; ++i)
        CHECK(tournament_select(flat, 2, rng) < 6);

    // Larger than the population: clamped.
    CHECK(tournament_select(fitness, 50, rng) == 3);
}

TEST_CASE("survivor selection")
{
    Population pop;
    for (double v : {8.0, 3.0, 6.0, 1.0, 9.0, 4.0, 2.0})
        pop.push_back(with_minmax(v));
    auto const kept = survivor_selection(pop, 3);
    REQUIRE(kept.size() == 3);
    CHECK(kept[0].minmax() == 1.0);
    CHECK(kept[1].minmax() == 2.0);
    CHECK(kept[2].minmax() == 3.0);

    Population copies(30, with_minmax(5.0));
    CHECK(survivor_selection(copies, 10).size() == 10);
    CHECK(survivor_selection(pop, 20).size() == pop.size());
}

TEST_CASE("diversify keeps the best and refills")
{
    auto const inst = random_instance(25, 3, 4);
    GaConfig cfg;
    Rng rng(2);
    auto const base = build_base_tours(inst, rng);
    auto pop = init_population(inst, base, 16, rng);
    double best = pop[0].minmax();
    for (auto const &ind : pop)
        best = std::min(best, ind.minmax());
    auto const sorted = survivor_selection(pop, 2);

    Rng ra(3), rb(3);
    auto const a = diversify(pop, inst, cfg, base, ra);
    auto const b = diversify(pop, inst, cfg, base, rb);
    REQUIRE(cfg.n_best() == 2);
    REQUIRE(a.size() == 10);
    CHECK(a[0].chromosome == sorted[0].chromosome);
    CHECK(a[1].chromosome == sorted[1].chromosome);
    double after = a[0].minmax();
    for (std::size_t i = 0; i < a.size(); ++i) {
        after = std::min(after, a[i].minmax());
        CHECK(a[i].chromosome == b[i].chromosome);
        CHECK_FALSE(check_solution(a[i].solution, inst).has_value());
    }
    CHECK(after == best);
}

TEST_CASE("run finds the optimum of a 6-city instance")
{
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        Rng rng(seed + 100);
        auto const inst = oracle::random_instance(6, 2, rng);
        GaConfig cfg;
        cfg.seed = seed;
        cfg.it_ni = 200;
        auto const result = run(inst, cfg);
        CHECK(result.best.minmax() == doctest::Approx(oracle::exhaustive_mtsp(inst)));
    }
}

TEST_CASE("cutoff path")
{
    auto const inst = random_instance(200, 5, 1);
    GaConfig cfg;
    cfg.cutoff_seconds = 0.01;
    auto const result = run(inst, cfg);
    CHECK(result.termination == Termination::Cutoff);
    CHECK_FALSE(check_solution(result.best.solution, inst).has_value());
    CHECK(result.seconds < 5.0);
}

TEST_CASE("generation limit")
{
    auto const inst = random_instance(30, 3, 1);
    GaConfig cfg;
    cfg.max_generations = 7;
    auto const result = run(inst, cfg);
    CHECK(result.termination == Termination::GenerationLimit);
    CHECK(result.generations == 7);
}

TEST_CASE("history is monotone and runs are deterministic")
{
    auto const inst = random_instance(40, 4, 12);
    GaConfig cfg;
    cfg.seed = 77;
    cfg.it_ni = 300;
    cfg.it_div = 100;
    std::vector<MtspSolution> seen;
    RunOptions options;
    options.on_improvement = [&](HistoryEntry const &, Individual const &ind) { seen.push_back(ind.solution); };
    auto const a = run(inst, cfg, options);
    auto const b = run(inst, cfg);

    CHECK(a.termination == Termination::NoImprovement);
    REQUIRE_FALSE(a.history.empty());
    REQUIRE(seen.size() == a.history.size());
    for (std::size_t i = 0; i < a.history.size(); ++i) {
        CHECK_FALSE(check_solution(seen[i], inst).has_value());
        CHECK(seen[i].makespan == a.history[i].makespan);
        if (i > 0) {
            CHECK(a.history[i].makespan < a.history[i - 1].makespan);
            CHECK(a.history[i].generation >= a.history[i - 1].generation);
        }
    }
    CHECK(a.history.back().makespan == a.best.minmax());

    CHECK(a.best.chromosome == b.best.chromosome);
    CHECK(a.best.solution == b.best.solution);
    CHECK(a.generations == b.generations);
    REQUIRE(a.history.size() == b.history.size());
    for (std::size_t i = 0; i < a.history.size(); ++i) {
        CHECK(a.history[i].generation == b.history[i].generation);
        CHECK(a.history[i].makespan == b.history[i].makespan);
    }
}

TEST_CASE("configuration")
{
    GaConfig cfg;
    CHECK(cfg.n_best() == 2);
    CHECK(cfg.n_close(50) == 5);
    CHECK(cfg.n_close(3) == 1);
    CHECK(cfg.n_close(5000) == 500);
    cfg.set("mu", "12");
    CHECK(cfg.mu == 12);
    cfg.set("p_remove", "0.25");
    CHECK(cfg.p_remove == 0.25);
    CHECK_THROWS_AS(cfg.set("nope", "1"), std::invalid_argument);
    CHECK_THROWS_AS(cfg.set("mu", "x"), std::invalid_argument);
    cfg.mu = 0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    CHECK(crossover_from_string("ox") == CrossoverKind::Ox);
    CHECK(to_string(Termination::Cutoff) == "cutoff");
}
