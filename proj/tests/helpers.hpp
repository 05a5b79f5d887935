#pragma once

#include <random>

#include "majority/graph.hpp"
#include "majority/opinions.hpp"

namespace testutil {

using majority::Graph;
using majority::Opinions;

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
    Graph g(n);
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

// random spanning tree plus independent extra edges
inline Graph random_connected_graph(int n, double extra_p, std::mt19937_64& rng) {
    Graph g(n);
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> pick(0, v - 1);
        g.add_edge(v, pick(rng));
    }
    std::bernoulli_distribution coin(extra_p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v) && coin(rng)) g.add_edge(u, v);
    return g;
}

inline Opinions random_opinions(int n, std::mt19937_64& rng) {
    Opinions f(n);
    for (int v = 0; v < n; ++v) f.set(v, (rng() & 1u) != 0);
    return f;
}

// Reference implementation of one round, deliberately naive: recount for
// every node, three explicit cases.
inline Opinions naive_step(const Graph& g, const Opinions& f) {
    Opinions out(f.size());
    for (int v = 0; v < g.node_count(); ++v) {
        int white = 0, total = g.degree(v);
        for (int u : g.neighbors(v))
            if (f.get(u)) ++white;
        if (g.has_loop(v)) {
            ++total;
            if (f.get(v)) ++white;
        }
        if (2 * white > total)
            out.set(v, true);
        else if (2 * white < total)
            out.set(v, false);
        else
            out.set(v, f.get(v));
    }
    return out;
}

inline bool is_bipartite(const Graph& g) {
    int n = g.node_count();
    std::vector<int> side(static_cast<size_t>(n), -1);
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (side[static_cast<size_t>(s)] >= 0) continue;
        side[static_cast<size_t>(s)] = 0;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : g.neighbors(v)) {
                if (side[static_cast<size_t>(u)] < 0) {
                    side[static_cast<size_t>(u)] = 1 - side[static_cast<size_t>(v)];
                    stack.push_back(u);
                } else if (side[static_cast<size_t>(u)] == side[static_cast<size_t>(v)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace testutil
