#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "majority/graph.hpp"
#include "majority/opinions.hpp"

namespace majority {

struct WorstCaseResult {
    int max_voting_time = 0;
    Opinions witness;
    std::string mode;  // "exact" | "sampled"
    uint64_t explored = 0;
};

// Exhaustive worst case over all initial assignments; node 0 is pinned to
// black (complement symmetry), witnesses merged by (max T, lex-min).
// workers = 0 picks the hardware concurrency.
WorstCaseResult exact_worst_case(const Graph& g, int node_limit = 22, int workers = 0);

// Seeded random assignments plus a single-bit-flip hill climb; seeds are
// extra starting points evaluated alongside the random ones. Lower-bounds
// the true worst case.
WorstCaseResult sampled_worst_case(const Graph& g, int samples, uint64_t seed,
                                   const std::vector<Opinions>& extra_seeds = {});

// All-black grid with a boustrophedon white path: full white rows every
// third row starting at row 0, joined by two-cell connector columns at
// alternating ends. A full row landing on the bottom edge is skipped when
// enough rows remain (its connector junction would be a stable corner);
// otherwise the final corner cell is dropped so one end always erodes.
// rows, cols >= 2.
Opinions serpentine_opinions(int rows, int cols);

}  // namespace majority
