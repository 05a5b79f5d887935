#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "majority/graph.hpp"
#include "majority/opinions.hpp"

namespace majority {

struct Literal {
    int var = 0;       // 1-based
    bool negated = false;
};

struct CnfFormula {
    int num_vars = 0;
    std::vector<std::array<Literal, 3>> clauses;

    int num_clauses() const { return static_cast<int>(clauses.size()); }
    bool satisfied_by(const std::vector<bool>& a) const;
};

// DIMACS CNF; clauses must have exactly 3 literals.
CnfFormula parse_cnf(std::istream& in);
CnfFormula parse_cnf_file(const std::string& path);

// The gadget graph built from a 3-CNF formula. Node blocks, in id order:
//   literal cliques  2n cliques of size ell (clique 2i: x_{i+1},
//                    clique 2i+1: the negation), representatives are the
//                    first 3 nodes of each clique
//   K_white, K_black anchor cliques of size ell; external edges attach
//                    only to low-index port nodes
//   OR outputs       one node per clause
//   AND output       u_0
//   gate path        u_1 .. u_{4n}, four nodes per 2/3-gate
struct ReductionLayout {
    GraphBundle bundle;
    int num_vars = 0;
    int num_clauses = 0;
    int ell = 0;  // clique size, 10(m+n)+1
    int h = 0;    // layer count, 3+4n

    int kwhite_base = 0, kblack_base = 0;
    std::vector<int> or_outputs;
    int and_node = 0;
    std::vector<int> gate_path;  // u_1 .. u_{4n}

    int clique_index(int var, bool negated) const { return 2 * (var - 1) + (negated ? 1 : 0); }
    int clique_base(int clique) const { return clique * ell; }
    std::array<int, 3> representatives(int clique) const {
        int b = clique_base(clique);
        return {b, b + 1, b + 2};
    }
    int node_count() const { return bundle.graph.node_count(); }
};

// Builds G(Phi). Requires m >= 2. Structural invariants (port capacities,
// gate parity balance, connectivity, node-count formula) are asserted and
// violations raise std::logic_error.
ReductionLayout build_reduction(const CnfFormula& phi);

// The opinion assignment f_A for a Boolean assignment a: positive literal
// cliques get floor(ell/2) black nodes including all representatives,
// negative cliques are all black, K_white white, K_black black, all gate
// nodes black.
Opinions assignment_to_opinions(const ReductionLayout& layout, const std::vector<bool>& a);

// Recognizes opinion vectors of the f_A shape and decodes the assignment.
std::optional<std::vector<bool>> decode_assignment(const ReductionLayout& layout, const Opinions& f);

struct StageTiming {
    std::string stage;
    int expected_round = 0;
    bool ok = false;
};

struct VerifyReport {
    bool ok = false;
    int voting_time = -1;
    int expected_voting_time = 0;
    std::vector<StageTiming> stages;
    std::vector<std::string> failures;
};

// Runs the process from f_A for a satisfying assignment and checks the
// staged schedule: positive-clique non-representatives flip at round 1,
// representatives at round 2, OR outputs at round 3, u_0 at round 4, then
// one gate node per round. Throws if a does not satisfy phi.
VerifyReport verify_satisfiable_direction(const CnfFormula& phi, const std::vector<bool>& a);

struct UnsatSampleReport {
    int h_plus_1 = 0;
    int max_voting_time = 0;
    Opinions argmax;
    uint64_t samples_run = 0;
    uint64_t structured_run = 0;
    uint64_t reached_threshold = 0;  // samples with voting time >= h+1
    // For threshold-reaching samples of the f_A shape: decoded assignment
    // and whether it satisfies phi.
    std::vector<std::pair<std::vector<bool>, bool>> decoded_witnesses;
};

// Seeded random initial assignments plus the structured family
// {f_A(a)} over Boolean assignments (all of them when n <= 12, otherwise
// num_samples random ones).
UnsatSampleReport sample_unsat_ceiling(const CnfFormula& phi, int num_samples, uint64_t seed);

}  // namespace majority
