#include <doctest.h>

#include "fsd/bench.hpp"
#include "fsd/delays.hpp"
#include "fsd/exact.hpp"
#include "fsd/rng.hpp"

using namespace fsd;

TEST_CASE("small optima") {
    const Instance twins({{1, 5, 1}, {1, 5, 1}});
    const ExactResult r = solve_exact(twins);
    CHECK(r.makespan == 8);
    CHECK(r.optimal);
    CHECK(validate(twins, r.schedule).ok());
    CHECK(makespan(twins, r.schedule) == 8);

    CHECK(solve_exact(Instance({{1, 6, 1}, {2, 0, 2}})).makespan == 8);
    CHECK(solve_exact(Instance({{3, 4, 5}})).makespan == 12);
    CHECK(solve_exact(Instance{}).makespan == 0);
    CHECK(solve_exact(Instance{}).optimal);
}

TEST_CASE("grid oracle basics") {
    CHECK(solve_exact_grid(Instance({{1, 5, 1}, {1, 5, 1}})) == 8);
    CHECK(solve_exact_grid(Instance({{2, 0, 2}, {2, 0, 2}})) == 6);
    CHECK(solve_exact_grid(Instance{}) == 0);

    Instance five;
    for (int j = 0; j < 5; ++j) five.jobs.push_back({1, 0, 1});
    CHECK_THROWS_AS(solve_exact_grid(five), CapacityError);
    CHECK_THROWS_AS(solve_exact_grid(Instance({{30, 30, 30}})), CapacityError);
}

TEST_CASE("search equals exhaustive grid enumeration on tiny instances") {
    SplitMix64 rng(31);
    int ran = 0;
    while (ran < 250) {
        const int n = static_cast<int>(rng.uniform(1, 4));
        Instance inst;
        for (int j = 0; j < n; ++j) {
            inst.jobs.push_back({rng.uniform(0, 4), rng.uniform(0, 5), rng.uniform(0, 4)});
        }
        Time horizon = 0;
        for (const Job& j : inst.jobs) horizon += j.a + j.l + j.b;
        if (horizon > 26) continue;
        ++ran;
        const ExactResult r = solve_exact(inst);
        REQUIRE(r.optimal);
        REQUIRE(validate(inst, r.schedule).ok());
        REQUIRE(makespan(inst, r.schedule) == r.makespan);
        REQUIRE(r.makespan == solve_exact_grid(inst));
    }
}

TEST_CASE("single-delay instances match the equal-delay solver (nonempty ops)") {
    SplitMix64 rng(32);
    for (int trial = 0; trial < 60; ++trial) {
        const Time delay = rng.uniform(0, 10);
        const Instance inst =
            random_instance(static_cast<int>(rng.uniform(1, 6)), delay, delay, 1, 8, rng);
        CHECK(solve_exact(inst).makespan == solve_equal_delay(inst).makespan);
    }
}

TEST_CASE("optimum respects the trivial lower bounds") {
    SplitMix64 rng(33);
    for (int trial = 0; trial < 60; ++trial) {
        // machine-load bounds hold always; the per-job bound needs a,b >= 1
        const Instance with_zeros =
            random_instance(static_cast<int>(rng.uniform(1, 5)), 0, 12, 0, 9, rng);
        const Time opt0 = solve_exact(with_zeros).makespan;
        CHECK(opt0 >= with_zeros.total_a());
        CHECK(opt0 >= with_zeros.total_b());

        const Instance full =
            random_instance(static_cast<int>(rng.uniform(1, 6)), 0, 12, 1, 9, rng);
        const Time opt = solve_exact(full).makespan;
        CHECK(opt >= full.total_a());
        CHECK(opt >= full.total_b());
        CHECK(opt >= full.max_job_span());
    }
}

TEST_CASE("a node limit reports a non-proven incumbent, never silently") {
    SplitMix64 rng(34);
    const Instance inst = random_instance(7, 0, 12, 1, 9, rng);
    SearchConfig cfg;
    cfg.node_limit = 3;
    const ExactResult capped = solve_exact(inst, cfg);
    CHECK_FALSE(capped.optimal);
    CHECK(validate(inst, capped.schedule).ok());
    CHECK(makespan(inst, capped.schedule) == capped.makespan);
    const ExactResult full = solve_exact(inst);
    CHECK(full.optimal);
    CHECK(full.makespan <= capped.makespan);
}

TEST_CASE("a caller-supplied incumbent only prunes, results stay real") {
    const Instance inst({{1, 6, 1}, {2, 0, 2}});
    SearchConfig cfg;
    cfg.incumbent = 8;  // equals the optimum: strict pruning keeps the warm start
    const ExactResult r = solve_exact(inst, cfg);
    CHECK(validate(inst, r.schedule).ok());
    CHECK(makespan(inst, r.schedule) == r.makespan);
    CHECK(r.makespan >= 8);
}

TEST_CASE("three or more delay values are searched too") {
    const Instance inst({{1, 0, 1}, {1, 3, 1}, {1, 7, 1}});
    const ExactResult r = solve_exact(inst);
    CHECK(r.optimal);
    CHECK(validate(inst, r.schedule).ok());
    CHECK(r.makespan == solve_exact_grid(inst));
}
