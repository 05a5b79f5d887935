#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "helpers.hpp"
#include "majority/dynamics.hpp"
#include "majority/generators.hpp"
#include "majority/potential.hpp"
#include "majority/search.hpp"

using namespace majority;
using testutil::random_connected_graph;

TEST_CASE("exhaustive worst case on fixed graphs") {
    WorstCaseResult k5 = exact_worst_case(gen_complete(5).graph);
    CHECK(k5.max_voting_time == 1);
    CHECK(k5.mode == "exact");
    CHECK(k5.explored == 16);  // node 0 pinned, 2^4 starts

    CHECK(exact_worst_case(gen_star(3).graph).max_voting_time == 1);

    WorstCaseResult p6 = exact_worst_case(gen_path(6).graph);
    CHECK(p6.max_voting_time == 4);  // one below the parity bound
    CHECK(p6.max_voting_time == bound_E(gen_path(6).graph) - 1);
    CHECK(run(gen_path(6).graph, p6.witness).voting_time == 4);
}

TEST_CASE("witness reproduces the reported maximum") {
    std::mt19937_64 rng(103);
    for (int it = 0; it < 20; ++it) {
        Graph g = random_connected_graph(9, 0.3, rng);
        WorstCaseResult r = exact_worst_case(g);
        CHECK(run(g, r.witness).voting_time == r.max_voting_time);
        CHECK_FALSE(r.witness.get(0));  // canonical representative
    }
}

TEST_CASE("pinning node 0 loses nothing against the full enumeration") {
    std::mt19937_64 rng(107);
    for (int it = 0; it < 15; ++it) {
        int n = 5 + static_cast<int>(rng() % 5);
        Graph g = random_connected_graph(n, 0.35, rng);
        int brute = 0;
        for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
            Opinions f(n);
            for (int v = 0; v < n; ++v) f.set(v, (mask >> v) & 1u);
            brute = std::max(brute, run(g, f).voting_time);
        }
        CHECK(exact_worst_case(g).max_voting_time == brute);
    }
}

TEST_CASE("result is independent of the worker count") {
    std::mt19937_64 rng(109);
    for (int it = 0; it < 8; ++it) {
        Graph g = random_connected_graph(11, 0.3, rng);
        WorstCaseResult one = exact_worst_case(g, 22, 1);
        WorstCaseResult three = exact_worst_case(g, 22, 3);
        CHECK(one.max_voting_time == three.max_voting_time);
        CHECK(one.witness == three.witness);
        CHECK(one.explored == three.explored);
    }
}

TEST_CASE("node limit refuses oversized instances") {
    CHECK_THROWS_AS(exact_worst_case(gen_grid(5, 5).graph, 22), std::invalid_argument);
    CHECK_NOTHROW(exact_worst_case(gen_grid(5, 5).graph, 25));
}

TEST_CASE("sampled search lower-bounds the exact optimum and is seeded") {
    std::mt19937_64 rng(113);
    for (int it = 0; it < 10; ++it) {
        Graph g = random_connected_graph(10, 0.3, rng);
        WorstCaseResult ex = exact_worst_case(g);
        WorstCaseResult sa = sampled_worst_case(g, 60, 12345);
        CHECK(sa.mode == "sampled");
        CHECK(sa.max_voting_time <= ex.max_voting_time);
        CHECK(run(g, sa.witness).voting_time == sa.max_voting_time);

        WorstCaseResult again = sampled_worst_case(g, 60, 12345);
        CHECK(again.max_voting_time == sa.max_voting_time);
        CHECK(again.witness == sa.witness);
    }
}

TEST_CASE("injected seeds are kept when they beat the random samples") {
    Graph g = gen_grid(8, 8).graph;
    Opinions snake = serpentine_opinions(8, 8);
    int t_snake = run(g, snake).voting_time;
    WorstCaseResult r = sampled_worst_case(g, 20, 7, {snake});
    CHECK(r.max_voting_time >= t_snake);

    Opinions wrong_size(5);
    CHECK_THROWS_AS(sampled_worst_case(g, 5, 7, {wrong_size}), std::invalid_argument);
}

TEST_CASE("serpentine start beats plain random starts on larger grids") {
    Graph g = gen_grid(10, 10).graph;
    int t_snake = run(g, serpentine_opinions(10, 10)).voting_time;
    std::mt19937_64 rng(12345);
    int best_random = 0;
    for (int it = 0; it < 200; ++it)
        best_random = std::max(best_random, run(g, testutil::random_opinions(100, rng)).voting_time);
    CHECK(t_snake > best_random);
}

TEST_CASE("serpentine voting times grow with the grid") {
    Graph g4 = gen_grid(4, 4).graph;
    Graph g6 = gen_grid(6, 6).graph;
    Graph g8 = gen_grid(8, 8).graph;
    int t4 = run(g4, serpentine_opinions(4, 4)).voting_time;
    int t6 = run(g6, serpentine_opinions(6, 6)).voting_time;
    int t8 = run(g8, serpentine_opinions(8, 8)).voting_time;
    CHECK(t4 == 2);
    CHECK(t6 == 8);
    CHECK(t8 == 20);
    CHECK(t4 < t6);
    CHECK(t6 < t8);
}

TEST_CASE("serpentine pattern shape") {
    Opinions f = serpentine_opinions(2, 2);
    CHECK(f.size() == 4);
    CHECK(f.count_ones() >= 2);  // top row white

    CHECK_THROWS_AS(serpentine_opinions(1, 4), std::invalid_argument);

    // top row is always all white
    for (int s : {4, 7, 10}) {
        Opinions g = serpentine_opinions(s, s);
        for (int c = 0; c < s; ++c) CHECK(g.get(c));
        // bottom row stays black once the skip rule applies
        if (s >= 6)
            for (int c = 0; c < s; ++c) CHECK_FALSE(g.get((s - 1) * s + c));
    }
}
