#pragma once

#include <optional>
#include <vector>

#include "majority/graph.hpp"
#include "majority/opinions.hpp"

namespace majority {

struct Trajectory {
    bool converged = false;
    int voting_time = -1;  // valid only when converged
    Opinions period_first;   // f_T
    Opinions period_second;  // f_{T+1}
    bool traced = false;
    std::vector<Opinions> states;  // f_0 .. f_{T+1} when traced
    int rounds_computed = 0;
};

// One synchronous round: each node adopts the strict majority opinion
// among its neighbors (counting its own opinion once when a self-loop
// flag is set), keeping its opinion on an exact tie.
Opinions step(const Graph& g, const Opinions& f);

// Iterates step until f_{t+2} = f_t, returning the minimal such t as the
// voting time. max_rounds defaults to 2|E| + 2, one beyond the proven
// bound; a non-converged result with a user-supplied budget is reported
// via converged = false, never silently truncated.
Trajectory run(const Graph& g, const Opinions& f0, std::optional<int> max_rounds = std::nullopt,
               bool trace = false);

// Per-node round after which the node follows its final 2-periodic
// pattern at every recorded round. Requires a traced, converged trajectory.
std::vector<int> stabilization_profile(const Trajectory& traj);

// True iff every node keeps its f-opinion or moves to q in fprime.
bool is_qswap(const Opinions& f, const Opinions& fprime, bool q);

// True iff step(step(f)) is a q-swap of f.
bool is_qfundamentalist(const Graph& g, const Opinions& f, bool q);

}  // namespace majority
