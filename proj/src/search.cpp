#include "majority/search.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <stdexcept>
#include <thread>

#include "majority/dynamics.hpp"

namespace majority {

namespace {

// Bitmask simulator for graphs with at most 64 nodes; states are plain
// uint64_t words so whole trajectories stay in registers.
struct MaskSim {
    int n;
    std::vector<uint64_t> adj;
    std::vector<int> total;  // degree plus loop
    uint64_t loops = 0;

    explicit MaskSim(const Graph& g) : n(g.node_count()), adj(static_cast<size_t>(n), 0), total(static_cast<size_t>(n), 0) {
        if (n > 64) throw std::invalid_argument("MaskSim: more than 64 nodes");
        for (int v = 0; v < n; ++v) {
            for (int u : g.neighbors(v)) adj[static_cast<size_t>(v)] |= uint64_t{1} << u;
            total[static_cast<size_t>(v)] = g.degree(v) + (g.has_loop(v) ? 1 : 0);
            if (g.has_loop(v)) loops |= uint64_t{1} << v;
        }
    }

    uint64_t step(uint64_t s) const {
        uint64_t next = 0;
        for (int v = 0; v < n; ++v) {
            uint64_t bit = uint64_t{1} << v;
            int ones = std::popcount(adj[static_cast<size_t>(v)] & s) + ((loops & bit) && (s & bit) ? 1 : 0);
            int t = total[static_cast<size_t>(v)];
            if (2 * ones > t)
                next |= bit;
            else if (2 * ones == t)
                next |= s & bit;
        }
        return next;
    }

    // minimal t with f_{t+2} = f_t, or -1 if the budget runs out
    int voting_time(uint64_t s0, int budget) const {
        uint64_t a = s0, b = step(a);
        for (int t = 0;; ++t) {
            uint64_t c = step(b);
            if (c == a) return t;
            if (t + 1 > budget) return -1;
            a = b;
            b = c;
        }
    }
};

Opinions to_opinions(uint64_t s, int n) {
    Opinions f(n);
    for (int v = 0; v < n; ++v) f.set(v, ((s >> v) & 1u) != 0);
    return f;
}

// lexicographic order on the bit string node 0, node 1, ...
bool lex_less_mask(uint64_t a, uint64_t b) {
    uint64_t diff = a ^ b;
    if (diff == 0) return false;
    int bit = std::countr_zero(diff);
    return ((a >> bit) & 1u) == 0;
}

int general_voting_time(const Graph& g, const Opinions& f0) {
    Trajectory traj = run(g, f0);
    if (!traj.converged) throw std::logic_error("voting time exceeded the proven budget");
    return traj.voting_time;
}

}  // namespace

WorstCaseResult exact_worst_case(const Graph& g, int node_limit, int workers) {
    int n = g.node_count();
    if (n < 1) throw std::invalid_argument("exact_worst_case: empty graph");
    if (n > node_limit)
        throw std::invalid_argument("exact_worst_case: " + std::to_string(n) + " nodes exceeds the limit of " +
                                    std::to_string(node_limit) + "; use sampled_worst_case or raise the limit");
    MaskSim sim(g);
    int budget = 2 * g.edge_count() + 2;
    uint64_t space = uint64_t{1} << (n - 1);  // node 0 pinned black
    if (workers <= 0) workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    workers = static_cast<int>(std::min<uint64_t>(static_cast<uint64_t>(workers), space));

    struct Best {
        int t = -1;
        uint64_t witness = 0;
    };
    std::vector<Best> best(static_cast<size_t>(workers));
    auto work = [&](int w) {
        uint64_t lo = space * static_cast<uint64_t>(w) / static_cast<uint64_t>(workers);
        uint64_t hi = space * static_cast<uint64_t>(w + 1) / static_cast<uint64_t>(workers);
        Best b;
        for (uint64_t x = lo; x < hi; ++x) {
            uint64_t assignment = (x ^ (x >> 1)) << 1;  // Gray code over nodes 1..n-1
            int t = sim.voting_time(assignment, budget);
            if (t < 0) throw std::logic_error("exact_worst_case: budget exceeded");
            if (t > b.t || (t == b.t && lex_less_mask(assignment, b.witness))) {
                b.t = t;
                b.witness = assignment;
            }
        }
        best[static_cast<size_t>(w)] = b;
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (auto& th : pool) th.join();
    }
    Best merged;
    for (const Best& b : best)
        if (b.t > merged.t || (b.t == merged.t && lex_less_mask(b.witness, merged.witness))) merged = b;

    WorstCaseResult res;
    res.max_voting_time = merged.t;
    res.witness = to_opinions(merged.witness, n);
    res.mode = "exact";
    res.explored = space;
    return res;
}

WorstCaseResult sampled_worst_case(const Graph& g, int samples, uint64_t seed,
                                   const std::vector<Opinions>& extra_seeds) {
    if (samples < 1) throw std::invalid_argument("sampled_worst_case: samples >= 1 required");
    int n = g.node_count();
    std::mt19937_64 rng(seed);
    WorstCaseResult res;
    res.mode = "sampled";
    res.max_voting_time = -1;

    auto eval = [&](const Opinions& f0) {
        int t = general_voting_time(g, f0);
        ++res.explored;
        if (t > res.max_voting_time || (t == res.max_voting_time && f0.lex_less(res.witness))) {
            res.max_voting_time = t;
            res.witness = f0;
        }
        return t;
    };

    for (const Opinions& f0 : extra_seeds) {
        if (f0.size() != n) throw std::invalid_argument("sampled_worst_case: seed size mismatch");
        eval(f0);
    }
    for (int s = 0; s < samples; ++s) {
        Opinions f0(n);
        for (int v = 0; v < n; ++v) f0.set(v, (rng() & 1u) != 0);
        eval(f0);
    }

    // hill climb from the incumbent: single-bit flips, accepted when the
    // voting time does not decrease; fixed budget of two sweeps
    Opinions cur = res.witness;
    int cur_t = res.max_voting_time;
    std::vector<int> order(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) order[static_cast<size_t>(v)] = v;
    for (int sweep = 0; sweep < 2; ++sweep) {
        std::shuffle(order.begin(), order.end(), rng);
        for (int v : order) {
            Opinions cand = cur;
            cand.set(v, !cand.get(v));
            int t = eval(cand);
            if (t >= cur_t) {
                cur = std::move(cand);
                cur_t = t;
            }
        }
    }
    return res;
}

Opinions serpentine_opinions(int rows, int cols) {
    if (rows < 2 || cols < 2) throw std::invalid_argument("serpentine_opinions: rows, cols >= 2 required");
    std::vector<int> white_rows;
    for (int r = 0; r < rows; r += 3) white_rows.push_back(r);
    // A full row on the bottom edge would meet its connector in a grid
    // corner, which survives as a tie and stops the erosion after one row;
    // leave a black margin instead whenever enough rows remain.
    if (white_rows.back() == rows - 1 && white_rows.size() > 2) white_rows.pop_back();

    Opinions f(rows * cols, false);
    auto paint = [&](int r, int c) { f.set(r * cols + c, true); };
    for (size_t i = 0; i < white_rows.size(); ++i) {
        int r = white_rows[i];
        for (int c = 0; c < cols; ++c) paint(r, c);
        if (i + 1 < white_rows.size()) {
            int cc = (i % 2 == 0) ? cols - 1 : 0;
            paint(r + 1, cc);
            paint(r + 2, cc);
        }
    }
    // the free end of the path: opposite side from the incoming connector
    int last_row = white_rows.back();
    int end_col = ((white_rows.size() - 1) % 2 == 0) ? cols - 1 : 0;
    if (last_row == rows - 1)  // a corner end would be stable; drop it so the path erodes
        f.set(last_row * cols + end_col, false);
    return f;
}

}  // namespace majority
