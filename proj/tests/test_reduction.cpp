#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "majority/dynamics.hpp"
#include "majority/graph.hpp"
#include "majority/reduction.hpp"

using namespace majority;

namespace {

CnfFormula cnf(const std::string& text) {
    std::istringstream in(text);
    return parse_cnf(in);
}

// (x1 v x2 v x2) ^ (~x1 v x2 v x2): satisfiable, duplicate literals
const char* kDupFormula = "p cnf 2 2\n1 2 2 0\n-1 2 2 0\n";

// all four sign patterns over two slots of x1 with x2 padding: unsatisfiable
const char* kUnsatFormula = "p cnf 2 4\n1 1 2 0\n1 1 -2 0\n-1 -1 2 0\n-1 -1 -2 0\n";

}  // namespace

TEST_CASE("DIMACS parsing") {
    CnfFormula phi = cnf("c comment\np cnf 2 1\n1 -2 2 0\n");
    CHECK(phi.num_vars == 2);
    CHECK(phi.num_clauses() == 1);
    CHECK(phi.clauses[0][1].var == 2);
    CHECK(phi.clauses[0][1].negated);
    CHECK(phi.satisfied_by({true, false}));
    CHECK_FALSE(cnf("p cnf 2 1\n-1 2 2 0\n").satisfied_by({true, false}));

    CHECK_THROWS(cnf(""));
    CHECK_THROWS(cnf("p cnf 2 1\n1 2 0\n"));        // width 2
    CHECK_THROWS(cnf("p cnf 2 1\n1 2 3 4 0\n"));    // width 4
    CHECK_THROWS(cnf("p cnf 2 1\n1 2 3 0\n"));      // variable out of range
    CHECK_THROWS(cnf("p cnf 2 2\n1 2 2 0\n"));      // fewer clauses than declared
    CHECK_THROWS(cnf("p dnf 2 1\n1 2 2 0\n"));      // bad header
}

TEST_CASE("gadget layout invariants") {
    CnfFormula phi = cnf(kDupFormula);
    ReductionLayout lay = build_reduction(phi);
    int n = 2, m = 2;
    CHECK(lay.ell == 10 * (m + n) + 1);
    CHECK(lay.h == 3 + 4 * n);
    CHECK(lay.node_count() == 2 * n * lay.ell + 2 * lay.ell + m + 1 + 4 * n);
    CHECK(lay.node_count() == 257);
    CHECK_NOTHROW(validate(lay.bundle.graph));
    CHECK(is_connected(lay.bundle.graph));

    // AND gate: m OR inputs + (m-2) anchor ports + the chain head
    CHECK(lay.bundle.graph.degree(lay.and_node) == 2 * m - 1);
    // chain nodes that are not gate inputs carry 2 anchor ports + 2 chain edges
    for (int i = 2; i <= 4 * n; ++i)
        if (i % 4 != 1) CHECK(lay.bundle.graph.degree(lay.gate_path[static_cast<size_t>(i - 1)]) == 4);
    // gate inputs add the 6 clique representatives
    CHECK(lay.bundle.graph.degree(lay.gate_path[4]) == 10);

    CHECK(lay.bundle.labels.at(lay.and_node) == "and");
    CHECK(lay.or_outputs.size() == 2);
}

TEST_CASE("OR outputs of distinct-literal clauses have degree 11") {
    CnfFormula phi = cnf("p cnf 3 2\n1 2 3 0\n-1 -2 -3 0\n");
    ReductionLayout lay = build_reduction(phi);
    for (int v : lay.or_outputs) CHECK(lay.bundle.graph.degree(v) == 11);  // 6 reps + 4 ports + AND
}

TEST_CASE("single-clause formulas are rejected") {
    CHECK_THROWS(build_reduction(cnf("p cnf 2 1\n1 2 2 0\n")));
}

TEST_CASE("structured opinions encode the Boolean assignment") {
    CnfFormula phi = cnf(kDupFormula);
    ReductionLayout lay = build_reduction(phi);
    std::vector<bool> a{true, true};
    Opinions f = assignment_to_opinions(lay, a);

    int white = 0;
    for (int k = 0; k < lay.node_count(); ++k)
        if (f.get(k)) ++white;
    // each positive clique has ceil(ell/2) whites, plus the white anchor clique
    CHECK(white == 2 * ((lay.ell + 1) / 2) + lay.ell);
    for (int var = 1; var <= 2; ++var)
        for (int r : lay.representatives(lay.clique_index(var, false))) CHECK_FALSE(f.get(r));
    for (int u : lay.gate_path) CHECK_FALSE(f.get(u));

    auto decoded = decode_assignment(lay, f);
    REQUIRE(decoded.has_value());
    CHECK(*decoded == a);
    CHECK_FALSE(decode_assignment(lay, Opinions(lay.node_count(), true)).has_value());
}

TEST_CASE("satisfiable direction runs for exactly 4 + 4n rounds") {
    CnfFormula phi = cnf(kDupFormula);
    VerifyReport rep = verify_satisfiable_direction(phi, {true, true});
    CHECK(rep.ok);
    CHECK(rep.voting_time == 12);
    CHECK(rep.expected_voting_time == 12);
    CHECK(rep.failures.empty());

    CHECK_THROWS(verify_satisfiable_direction(phi, {true, false}));  // not satisfying

    CnfFormula phi3 = cnf("p cnf 3 3\n1 2 3 0\n-1 2 3 0\n1 -2 3 0\n");
    VerifyReport rep3 = verify_satisfiable_direction(phi3, {true, true, true});
    CHECK(rep3.ok);
    CHECK(rep3.voting_time == 16);
}

TEST_CASE("literal-clique nodes stabilize early") {
    CnfFormula phi = cnf(kDupFormula);
    ReductionLayout lay = build_reduction(phi);
    Opinions f0 = assignment_to_opinions(lay, {true, true});
    Trajectory t = run(lay.bundle.graph, f0, std::nullopt, true);
    REQUIRE(t.converged);
    auto prof = stabilization_profile(t);
    for (int c = 0; c < 4; ++c) {
        auto reps = lay.representatives(c);
        for (int k = 0; k < lay.ell; ++k) {
            int v = lay.clique_base(c) + k;
            bool is_rep = k < 3;
            CHECK(prof[static_cast<size_t>(v)] <= (is_rep ? 2 : 1));
        }
        (void)reps;
    }
    for (int v : lay.or_outputs) CHECK(prof[static_cast<size_t>(v)] <= 3);
}

TEST_CASE("coloring both cliques of a variable majority-black stops early") {
    CnfFormula phi = cnf(kDupFormula);
    ReductionLayout lay = build_reduction(phi);
    Opinions f = assignment_to_opinions(lay, {true, true});
    // erase the encoded whites in every literal clique: no positive literal left
    for (int c = 0; c < 4; ++c)
        for (int k = 0; k < lay.ell; ++k) f.set(lay.clique_base(c) + k, false);
    Trajectory t = run(lay.bundle.graph, f);
    REQUIRE(t.converged);
    CHECK(t.voting_time < lay.h + 1);
}

TEST_CASE("unsat sampling stays below the threshold") {
    CnfFormula phi = cnf(kUnsatFormula);
    UnsatSampleReport rep = sample_unsat_ceiling(phi, 50, 1234);
    CHECK(rep.h_plus_1 == 12);
    CHECK(rep.max_voting_time < rep.h_plus_1);
    CHECK(rep.reached_threshold == 0);
    CHECK(rep.structured_run == 4);  // all 2^2 Boolean assignments

    UnsatSampleReport again = sample_unsat_ceiling(phi, 50, 1234);
    CHECK(again.max_voting_time == rep.max_voting_time);
    CHECK(again.argmax == rep.argmax);
}

TEST_CASE("satisfiable sampling flags threshold hits that decode to models") {
    CnfFormula phi = cnf(kDupFormula);
    UnsatSampleReport rep = sample_unsat_ceiling(phi, 20, 99);
    CHECK(rep.max_voting_time >= rep.h_plus_1);
    CHECK(rep.reached_threshold > 0);
    REQUIRE_FALSE(rep.decoded_witnesses.empty());
    for (const auto& [a, sat] : rep.decoded_witnesses) {
        CHECK(phi.satisfied_by(a));
        CHECK(sat);
    }
}
