#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "helpers.hpp"
#include "majority/dynamics.hpp"
#include "majority/generators.hpp"
#include "majority/potential.hpp"

using namespace majority;
using testutil::naive_step;
using testutil::random_connected_graph;
using testutil::random_graph;
using testutil::random_opinions;

TEST_CASE("single-step examples") {
    CHECK(step(gen_complete(2).graph, Opinions::from_string("10")).to_string() == "01");
    CHECK(step(gen_path(3).graph, Opinions::from_string("010")).to_string() == "101");
    Graph g = gen_grid(3, 3).graph;
    Opinions mono(9, true);
    CHECK(step(g, mono) == mono);
    CHECK_THROWS_AS(step(g, Opinions(4, false)), std::invalid_argument);
}

TEST_CASE("isolated nodes and lazy ties keep their opinion") {
    Graph g(3);
    g.add_edge(0, 1);  // node 2 isolated
    Opinions f = Opinions::from_string("011");
    CHECK(step(g, f).to_string() == "101");

    // even-degree tie: path center with one white, one black neighbor
    CHECK(step(gen_path(3).graph, Opinions::from_string("011")).to_string() == "111");
    CHECK(step(gen_path(3).graph, Opinions::from_string("001")).to_string() == "000");
}

TEST_CASE("step matches the naive reference, with and without loops") {
    std::mt19937_64 rng(3);
    for (int it = 0; it < 200; ++it) {
        Graph g = random_graph(12, 0.3, rng);
        Opinions f = random_opinions(12, rng);
        CHECK(step(g, f) == naive_step(g, f));
        Graph gs = with_self_loops(g);
        CHECK(step(gs, f) == naive_step(gs, f));
    }
}

TEST_CASE("run finds the minimal voting time") {
    Graph p4 = gen_path(4).graph;
    Trajectory traj = run(p4, Opinions::from_string("1011"), std::nullopt, true);
    REQUIRE(traj.converged);
    CHECK(traj.voting_time == 2);
    CHECK(traj.states.size() == 4);  // f_0 .. f_{T+1}

    std::mt19937_64 rng(17);
    for (int it = 0; it < 100; ++it) {
        Graph g = random_graph(10, 0.35, rng);
        Opinions f0 = random_opinions(10, rng);
        Trajectory t = run(g, f0, std::nullopt, true);
        REQUIRE(t.converged);
        int T = t.voting_time;
        // minimality: no earlier round starts the 2-periodic pair
        for (int k = 0; k + 2 <= T + 1; ++k) CHECK(t.states[k + 2] != t.states[k]);
        // the stored pair really is the period
        CHECK(step(g, t.period_second) == t.period_first);
        CHECK(t.period_first == t.states[T]);
    }
}

TEST_CASE("monochromatic start is already 2-periodic") {
    Trajectory t = run(gen_cycle(7).graph, Opinions(7, true));
    CHECK(t.converged);
    CHECK(t.voting_time == 0);
}

TEST_CASE("budget exhaustion is reported, never silently truncated") {
    Graph p4 = gen_path(4).graph;
    Trajectory t = run(p4, Opinions::from_string("1011"), 0);
    CHECK_FALSE(t.converged);
    CHECK(run(p4, Opinions::from_string("1011"), 2 * p4.edge_count() + 1).converged);
}

TEST_CASE("convergence within 2|E|+1 on random instances") {
    std::mt19937_64 rng(23);
    for (int it = 0; it < 300; ++it) {
        Graph g = random_graph(14, 0.25, rng);
        Trajectory t = run(g, random_opinions(14, rng), 2 * g.edge_count() + 1);
        CHECK(t.converged);
    }
}

TEST_CASE("complement symmetry") {
    std::mt19937_64 rng(29);
    for (int it = 0; it < 100; ++it) {
        Graph g = random_graph(12, 0.3, rng);
        Opinions f = random_opinions(12, rng);
        CHECK(step(g, f.complemented()) == step(g, f).complemented());
        CHECK(run(g, f).voting_time == run(g, f.complemented()).voting_time);
    }
}

TEST_CASE("trajectories on G and G* are identical") {
    std::mt19937_64 rng(31);
    for (int it = 0; it < 100; ++it) {
        Graph g = random_graph(12, 0.3, rng);
        Opinions f = random_opinions(12, rng);
        Trajectory a = run(g, f, std::nullopt, true);
        Trajectory b = run(with_self_loops(g), f, std::nullopt, true);
        CHECK(a.voting_time == b.voting_time);
        CHECK(a.states == b.states);
    }
}

TEST_CASE("stabilization profile") {
    Trajectory mono = run(gen_path(5).graph, Opinions(5, false), std::nullopt, true);
    for (int s : stabilization_profile(mono)) CHECK(s == 0);

    Trajectory swap = run(gen_complete(2).graph, Opinions::from_string("10"), std::nullopt, true);
    for (int s : stabilization_profile(swap)) CHECK(s == 0);

    // against the definition: from s(v) on, node v follows the final
    // parity pattern at every recorded round
    std::mt19937_64 rng(37);
    for (int it = 0; it < 50; ++it) {
        Graph g = random_graph(10, 0.3, rng);
        Trajectory t = run(g, random_opinions(10, rng), std::nullopt, true);
        auto prof = stabilization_profile(t);
        int last = static_cast<int>(t.states.size()) - 1;
        for (int v = 0; v < 10; ++v) {
            for (int k = prof[static_cast<size_t>(v)]; k <= last; ++k) {
                int anchor = (k % 2 == last % 2) ? last : last - 1;
                CHECK(t.states[static_cast<size_t>(k)].get(v) ==
                      t.states[static_cast<size_t>(anchor)].get(v));
            }
            if (prof[static_cast<size_t>(v)] > 0) {
                // minimality: one round earlier the pattern breaks
                int k = prof[static_cast<size_t>(v)] - 1;
                int anchor = (k % 2 == last % 2) ? last : last - 1;
                CHECK(t.states[static_cast<size_t>(k)].get(v) !=
                      t.states[static_cast<size_t>(anchor)].get(v));
            }
        }
    }
}

TEST_CASE("q-swap recognition") {
    Opinions f = Opinions::from_string("01");
    CHECK(is_qswap(f, f, true));
    CHECK(is_qswap(Opinions::from_string("00"), Opinions::from_string("11"), true));
    CHECK_FALSE(is_qswap(Opinions::from_string("01"), Opinions::from_string("10"), true));
}

TEST_CASE("q-fundamentalist recognition") {
    Graph p3 = gen_path(3).graph;
    CHECK(is_qfundamentalist(p3, Opinions::from_string("010"), true));  // 2-periodic
    CHECK(is_qfundamentalist(p3, Opinions::from_string("010"), false));

    Graph p5 = gen_path(5).graph;
    Opinions alt = Opinions::from_string("10101");
    Opinions ff = step(p5, step(p5, alt));
    CHECK(is_qfundamentalist(p5, alt, false) == is_qswap(alt, ff, false));
}

TEST_CASE("q-swap order is preserved along trajectories") {
    std::mt19937_64 rng(41);
    for (int it = 0; it < 100; ++it) {
        Graph g = random_graph(10, 0.3, rng);
        Opinions f = random_opinions(10, rng);
        bool q = (rng() & 1u) != 0;
        Opinions fp = f;
        for (int v = 0; v < 10; ++v)
            if ((rng() & 1u) != 0) fp.set(v, q);
        REQUIRE(is_qswap(f, fp, q));
        Opinions a = f, b = fp;
        for (int k = 0; k < 2 * g.edge_count() + 2; ++k) {
            CHECK(is_qswap(a, b, q));
            for (int v = 0; v < 10; ++v)
                if (a.get(v) == q) CHECK(b.get(v) == q);  // moves toward q persist
            a = step(g, a);
            b = step(g, b);
        }
    }
}

TEST_CASE("q-fundamentalist states converge in 2 * (nodes away from q)") {
    std::mt19937_64 rng(43);
    int found = 0;
    for (int it = 0; it < 500; ++it) {
        Graph g = random_graph(9, 0.3, rng);
        Opinions f = random_opinions(9, rng);
        for (bool q : {false, true}) {
            if (!is_qfundamentalist(g, f, q)) continue;
            ++found;
            int away = 0;
            for (int v = 0; v < 9; ++v)
                if (f.get(v) != q) ++away;
            Trajectory t = run(g, f);
            REQUIRE(t.converged);
            CHECK(t.voting_time <= 2 * away);
        }
    }
    CHECK(found > 0);
}
