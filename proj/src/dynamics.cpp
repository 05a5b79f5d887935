#include "majority/dynamics.hpp"

#include <stdexcept>

namespace majority {

Opinions step(const Graph& g, const Opinions& f) {
    if (f.size() != g.node_count()) throw std::invalid_argument("step: opinion size mismatch");
    int n = g.node_count();
    Opinions next(n);
    for (int v = 0; v < n; ++v) {
        int ones = 0, total = g.degree(v);
        for (int u : g.neighbors(v)) ones += f.get(u) ? 1 : 0;
        if (g.has_loop(v)) {
            ++total;
            ones += f.get(v) ? 1 : 0;
        }
        bool value;
        if (2 * ones > total)
            value = true;
        else if (2 * ones < total)
            value = false;
        else
            value = f.get(v);
        next.set(v, value);
    }
    return next;
}

Trajectory run(const Graph& g, const Opinions& f0, std::optional<int> max_rounds, bool trace) {
    if (f0.size() != g.node_count()) throw std::invalid_argument("run: opinion size mismatch");
    int budget = max_rounds.value_or(2 * g.edge_count() + 2);
    Trajectory traj;
    traj.traced = trace;
    Opinions a = f0;          // f_t
    Opinions b = step(g, a);  // f_{t+1}
    traj.rounds_computed = 1;
    if (trace) {
        traj.states.push_back(a);
        traj.states.push_back(b);
    }
    for (int t = 0;; ++t) {
        Opinions c = step(g, b);  // f_{t+2}
        ++traj.rounds_computed;
        if (trace) traj.states.push_back(c);
        if (c == a) {
            // one extra verification step, discarded
            if (step(g, c) != b) throw std::logic_error("run: detected period is not 2-periodic");
            traj.converged = true;
            traj.voting_time = t;
            traj.period_first = std::move(a);
            traj.period_second = std::move(b);
            if (trace) traj.states.resize(static_cast<size_t>(t) + 2);
            return traj;
        }
        if (t + 1 > budget) {
            traj.converged = false;
            return traj;
        }
        a = std::move(b);
        b = std::move(c);
    }
}

std::vector<int> stabilization_profile(const Trajectory& traj) {
    if (!traj.converged || !traj.traced) throw std::invalid_argument("stabilization_profile: needs a traced, converged trajectory");
    int T = traj.voting_time;
    int n = traj.period_first.size();
    std::vector<int> out(static_cast<size_t>(n), 0);
    // final pattern at round s: period_first when (s - T) is even, else period_second
    for (int v = 0; v < n; ++v) {
        int stab = 0;
        for (int s = static_cast<int>(traj.states.size()) - 1; s >= 0; --s) {
            bool expect = ((s - T) % 2 == 0) ? traj.period_first.get(v) : traj.period_second.get(v);
            if (traj.states[static_cast<size_t>(s)].get(v) != expect) {
                stab = s + 1;
                break;
            }
        }
        out[static_cast<size_t>(v)] = stab;
    }
    return out;
}

bool is_qswap(const Opinions& f, const Opinions& fprime, bool q) {
    if (f.size() != fprime.size()) throw std::invalid_argument("is_qswap: size mismatch");
    for (int v = 0; v < f.size(); ++v)
        if (fprime.get(v) != f.get(v) && fprime.get(v) != q) return false;
    return true;
}

bool is_qfundamentalist(const Graph& g, const Opinions& f, bool q) {
    return is_qswap(f, step(g, step(g, f)), q);
}

}  // namespace majority
